#include "numrange/complex_literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace numrange {

namespace {

struct Component {
    double value;
    bool imaginary;
};

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    Complex run() {
        if (s_.empty()) throw ComplexParseError("empty complex literal", 0);
        for (size_t i = 0; i < s_.size(); ++i) {
            const char c = s_[i];
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' ||
                  c == 'E' || c == '+' || c == '-' || c == 'i')) {
                throw ComplexParseError("invalid character '" + std::string(1, c) +
                                            "' at position " + std::to_string(i),
                                        i);
            }
        }
        double re = 0.0, im = 0.0;
        const Component first = component(false);
        if (first.imaginary) {
            im = first.value;
        } else {
            re = first.value;
            if (pos_ < s_.size()) {
                const size_t at = pos_;
                const Component second = component(true);
                if (!second.imaginary) {
                    throw ComplexParseError(
                        "expected imaginary part with trailing 'i' at position " +
                            std::to_string(at),
                        at);
                }
                im = second.value;
            }
        }
        if (pos_ != s_.size()) {
            throw ComplexParseError("unexpected trailing characters at position " +
                                        std::to_string(pos_),
                                    pos_);
        }
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw ComplexParseError("complex literal overflows to non-finite value", 0);
        }
        return {re, im};
    }

  private:
    Component component(bool require_sign) {
        double sign = 1.0;
        bool has_sign = false;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            sign = s_[pos_] == '-' ? -1.0 : 1.0;
            has_sign = true;
            ++pos_;
        }
        if (require_sign && !has_sign) {
            throw ComplexParseError("expected sign at position " + std::to_string(pos_), pos_);
        }
        if (pos_ < s_.size() && s_[pos_] == 'i') {  // bare imaginary unit
            ++pos_;
            return {sign, true};
        }
        double value = 0.0;
        const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc()) {
            throw ComplexParseError("expected number at position " + std::to_string(pos_), pos_);
        }
        pos_ = static_cast<size_t>(end - s_.data());
        bool imaginary = false;
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            ++pos_;
            imaginary = true;
        }
        return {sign * value, imaginary};
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

Complex parse_complex(std::string_view text) { return Parser(text).run(); }

std::string format_complex(Complex z) {
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    } else if (z.real() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17gi", z.imag());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    }
    return buf;
}

}  // namespace numrange
