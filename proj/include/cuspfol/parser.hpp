#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspfol/forms.hpp"
#include "cuspfol/jets.hpp"

namespace cuspfol {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct ParsedForm {
    std::string source;
    bool meromorphic = false;
    OneForm form;                  // the 1-form (den d(num) - num d(den) for meromorphic input)
    std::optional<Jet2> num, den;  // meromorphic pair
    int degree = 0;                // max polynomial degree seen in the input

    // text that parses back to an equal value
    std::string print() const;
};

// "(2*x^3*y - y^3) dx + (x*y^2 - x^4) dy" or "mero: (y^2 + x^3)/(x*y)"; coefficients are polynomials in x, y
ParsedForm parse_form(const std::string &text, int order = kDefaultOrder);

// series in one variable: + - * / ^, exp(.), log(.), literals p/q and i
Jet1 parse_series1(const std::string &text, const std::string &var = "z", int order = kDefaultOrder);
// series in two variables, division only by units or exact factors
Jet2 parse_series2(const std::string &text, const std::string &xvar = "x", const std::string &yvar = "y",
                   int order = kDefaultOrder);
// a single coefficient, e.g. "3/2", "1-2*i"
Coeff parse_coeff(const std::string &text);

}  // namespace cuspfol
