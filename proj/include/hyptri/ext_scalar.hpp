#pragma once

// Extended reals and segment lengths: R ∪ {±∞} plus an imaginary part that is
// restricted to the quanta {0, π/2, π}.

#include <complex>
#include <numbers>
#include <utility>

#include <json.hpp>

namespace hyptri {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

class ExtReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : value_(v) {}  // NOLINT: implicit from double is intended

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::PosInf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // Finite value; throws UndefinedOperation for ±∞.
  double value() const;
  // IEEE view (±inf for the infinities); handy for printing and plotting.
  double as_double() const;

  ExtReal operator-() const;

  friend bool operator==(const ExtReal& x, const ExtReal& y);
  friend bool operator<(const ExtReal& x, const ExtReal& y);

 private:
  constexpr explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
};

ExtReal ext_add(ExtReal x, ExtReal y);
// Products follow the enumerated rules; ∞·0 is rejected.
ExtReal ext_mul(ExtReal x, ExtReal y);

enum class ImQuantum { Zero, HalfPi, Pi };

double quantum_value(ImQuantum q);

class ExtLength {
 public:
  constexpr ExtLength() = default;
  // An infinite real part forces the imaginary quantum to zero.
  ExtLength(ExtReal re, ImQuantum im = ImQuantum::Zero);

  const ExtReal& re() const { return re_; }
  ImQuantum im() const { return im_; }
  bool is_finite() const { return re_.is_finite(); }

  friend bool operator==(const ExtLength& x, const ExtLength& y) = default;

 private:
  ExtReal re_;
  ImQuantum im_ = ImQuantum::Zero;
};

ExtLength ext_add(const ExtLength& x, const ExtLength& y);
// Ordering on the real parts; throws IncomparableQuanta when quanta differ.
bool ext_less(const ExtLength& x, const ExtLength& y);

std::complex<double> ext_cosh(const ExtLength& x);
std::complex<double> ext_sinh(const ExtLength& x);
std::complex<double> ext_tanh(const ExtLength& x);

// Angle-valued quantity with an unrestricted imaginary part: angles of lines
// and distances of two ideal points on an ideal line.
struct ExtComplex {
  ExtReal re;
  double im = 0.0;

  static ExtComplex from(const ExtLength& x) { return {x.re(), quantum_value(x.im())}; }
  // Converts back when the imaginary part is exactly one of the quanta.
  bool is_quantized() const;
  ExtLength to_length() const;

  friend bool operator==(const ExtComplex& x, const ExtComplex& y) = default;
};

struct ExtPair {
  ExtComplex first;
  ExtComplex second;
};

enum class PointKind { Real, Infinite, Ideal };
enum class LineKind { Real, AtInfinity, Ideal };

// Lengths (AB, BA) of the two segments cut out by two points on a line of the
// given kind. `d` is the real auxiliary distance, already signed where the
// sign rule applies. Ideal carriers are handled by plane::distance_ext.
std::pair<ExtLength, ExtLength> segment_lengths(LineKind carrier, PointKind a, PointKind b,
                                                double d);

const char* to_string(PointKind k);
const char* to_string(LineKind k);

void to_json(nlohmann::json& j, const ExtReal& x);
void from_json(const nlohmann::json& j, ExtReal& x);
void to_json(nlohmann::json& j, const ExtLength& x);
void from_json(const nlohmann::json& j, ExtLength& x);
void to_json(nlohmann::json& j, const ExtComplex& x);

}  // namespace hyptri
