#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qcoh/extended_real.hpp"

namespace qcoh {

// A convex function f on (0, inf) with f(1) = 0, together with the two limits
// needed when a spectrum touches zero:
//   f(0+)                       -- used when the second argument has a zero eigenvalue
//   s = lim_{y->inf} f(y) / y   -- so that lim_{x->0+} x f(c/x) = c * s
// Both limits are supplied in closed form by each builtin.
class GeneratorFunction {
 public:
  GeneratorFunction(std::string name, std::vector<double> params,
                    std::function<double(double)> eval, ExtendedReal limit_at_zero,
                    ExtendedReal asymptotic_slope, bool operator_convex);

  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& params() const noexcept { return params_; }

  // f(x) for x in (0, inf).
  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  ExtendedReal limit_at_zero() const noexcept { return limit_at_zero_; }
  ExtendedReal asymptotic_slope() const noexcept { return slope_; }
  // lim_{x->0+} x f(c/x) for c >= 0.
  ExtendedReal limit_at_inf_weighted(double c) const;

  bool claims_operator_convex() const noexcept { return operator_convex_; }
  // For convex f this is equivalent to a non-positive asymptotic slope.
  bool monotone_decreasing() const noexcept;
  // Zero eigenvalues of the first argument only produce finite terms.
  bool finite_at_zero_weight() const noexcept { return slope_.is_finite(); }

  // The function this one is the transpose of, if any.
  const GeneratorFunction* transpose_base() const noexcept { return base_.get(); }

 private:
  friend GeneratorFunction transpose(const GeneratorFunction& f);

  std::string name_;
  std::vector<double> params_;
  std::function<double(double)> eval_;
  ExtendedReal limit_at_zero_;
  ExtendedReal slope_;
  bool operator_convex_;
  std::shared_ptr<const GeneratorFunction> base_;
};

using TransposeFunction = GeneratorFunction;

// f(x) = -ln x
GeneratorFunction builtin_neg_log();
// f_p(x) = (1 - x^p) / (p (1 - p)),  p in (-1, 2) \ {0, 1}
GeneratorFunction builtin_power(double p);
// f_q(x) = (1 - x^(1-q)) / (1 - q),  q in (0, 2) \ {1}
GeneratorFunction builtin_tsallis(double q);

// x f(1/x). Transposing twice gives back the original function object.
TransposeFunction transpose(const GeneratorFunction& f);

// Registry lookup: "neg_log", "power:<p>", "tsallis:<q>", optionally prefixed by
// '~' for the transpose. Throws UnknownGenerator or ParamOutOfRange.
GeneratorFunction parse_generator(std::string_view spec);

std::vector<std::string> builtin_names();

}  // namespace qcoh
