#include "hyptri/ext_scalar.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hyptri/error.hpp"

namespace hyptri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ImaginaryOverflow: return "ImaginaryOverflow";
    case ErrorCode::UndefinedOperation: return "UndefinedOperation";
    case ErrorCode::IncomparableQuanta: return "IncomparableQuanta";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::CoincidentArguments: return "CoincidentArguments";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::OverflowRisk: return "OverflowRisk";
    case ErrorCode::MissingVertices: return "MissingVertices";
    case ErrorCode::InconsistentCoords: return "InconsistentCoords";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::CevianParallel: return "CevianParallel";
    case ErrorCode::FootOutsideSegment: return "FootOutsideSegment";
    case ErrorCode::NonRealOrthocenter: return "NonRealOrthocenter";
    case ErrorCode::OnSideLine: return "OnSideLine";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double ExtReal::value() const {
  if (!is_finite()) throw Error(ErrorCode::UndefinedOperation, "value() of an infinite ExtReal");
  return value_;
}

double ExtReal::as_double() const {
  switch (kind_) {
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    case Kind::Finite: break;
  }
  return ExtReal(-value_);
}

bool operator==(const ExtReal& x, const ExtReal& y) {
  if (x.kind_ != y.kind_) return false;
  return !x.is_finite() || x.value_ == y.value_;
}

bool operator<(const ExtReal& x, const ExtReal& y) {
  if (x == y) return false;
  if (x.is_neg_inf() || y.is_pos_inf()) return true;
  if (x.is_pos_inf() || y.is_neg_inf()) return false;
  return x.value_ < y.value_;
}

ExtReal ext_add(ExtReal x, ExtReal y) {
  if (x.is_finite() && y.is_finite()) return ExtReal(x.value() + y.value());
  if (x.is_finite()) return y;
  if (y.is_finite()) return x;
  if (x.kind() == y.kind()) return x;
  return ExtReal(0.0);  // ∞ + (−∞)
}

ExtReal ext_mul(ExtReal x, ExtReal y) {
  if (x.is_finite() && y.is_finite()) return ExtReal(x.value() * y.value());
  const auto sign_of = [](const ExtReal& v) -> int {
    if (v.is_pos_inf()) return 1;
    if (v.is_neg_inf()) return -1;
    if (v.value() > 0) return 1;
    if (v.value() < 0) return -1;
    return 0;
  };
  const int s = sign_of(x) * sign_of(y);
  if (s == 0) throw Error(ErrorCode::UndefinedOperation, "product of an infinity and zero");
  return s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

double quantum_value(ImQuantum q) {
  switch (q) {
    case ImQuantum::HalfPi: return kHalfPi;
    case ImQuantum::Pi: return kPi;
    case ImQuantum::Zero: break;
  }
  return 0.0;
}

namespace {

int quantum_steps(ImQuantum q) { return static_cast<int>(q); }

// cos and sin of the quantum, exact.
std::pair<double, double> quantum_cis(ImQuantum q) {
  switch (q) {
    case ImQuantum::HalfPi: return {0.0, 1.0};
    case ImQuantum::Pi: return {-1.0, 0.0};
    case ImQuantum::Zero: break;
  }
  return {1.0, 0.0};
}

}  // namespace

ExtLength::ExtLength(ExtReal re, ImQuantum im) : re_(re), im_(re.is_finite() ? im : ImQuantum::Zero) {}

ExtLength ext_add(const ExtLength& x, const ExtLength& y) {
  const ExtReal re = ext_add(x.re(), y.re());
  if (!re.is_finite()) return ExtLength(re);
  const int steps = quantum_steps(x.im()) + quantum_steps(y.im());
  if (steps > 2) throw Error(ErrorCode::ImaginaryOverflow, "imaginary part exceeds pi");
  return ExtLength(re, static_cast<ImQuantum>(steps));
}

bool ext_less(const ExtLength& x, const ExtLength& y) {
  if (x.im() != y.im()) throw Error(ErrorCode::IncomparableQuanta, "lengths with different imaginary quanta");
  return x.re() < y.re();
}

std::complex<double> ext_cosh(const ExtLength& x) {
  if (!x.is_finite()) return {std::numeric_limits<double>::infinity(), 0.0};
  const double a = x.re().value();
  const auto [c, s] = quantum_cis(x.im());
  return {std::cosh(a) * c, std::sinh(a) * s};
}

std::complex<double> ext_sinh(const ExtLength& x) {
  if (!x.is_finite()) return {x.re().as_double(), 0.0};
  const double a = x.re().value();
  const auto [c, s] = quantum_cis(x.im());
  return {std::sinh(a) * c, std::cosh(a) * s};
}

std::complex<double> ext_tanh(const ExtLength& x) {
  if (!x.is_finite()) return {x.re().is_pos_inf() ? 1.0 : -1.0, 0.0};
  if (x.im() == ImQuantum::HalfPi) {
    // tanh(a + iπ/2) = coth a, real.
    return {1.0 / std::tanh(x.re().value()), 0.0};
  }
  return ext_sinh(x) / ext_cosh(x);
}

bool ExtComplex::is_quantized() const {
  if (!re.is_finite()) return im == 0.0;
  return im == 0.0 || im == kHalfPi || im == kPi;
}

ExtLength ExtComplex::to_length() const {
  if (!is_quantized()) throw Error(ErrorCode::UnsupportedConfiguration, "imaginary part is not a quantum");
  if (im == kHalfPi) return ExtLength(re, ImQuantum::HalfPi);
  if (im == kPi) return ExtLength(re, ImQuantum::Pi);
  return ExtLength(re);
}

std::pair<ExtLength, ExtLength> segment_lengths(LineKind carrier, PointKind a, PointKind b, double d) {
  using P = PointKind;
  const ExtLength inf_pair_first(ExtReal::pos_inf());
  const ExtLength inf_pair_second(ExtReal::neg_inf());
  const auto is = [&](P x, P y) { return (a == x && b == y) || (a == y && b == x); };

  if (carrier == LineKind::Real) {
    if (is(P::Real, P::Real)) return {ExtLength(d), ExtLength(-d, ImQuantum::Pi)};
    if (is(P::Real, P::Ideal)) return {ExtLength(d, ImQuantum::HalfPi), ExtLength(-d, ImQuantum::HalfPi)};
    if (is(P::Ideal, P::Ideal)) return {ExtLength(d, ImQuantum::Pi), ExtLength(-d)};
    return {inf_pair_first, inf_pair_second};  // any pair with an infinite point
  }
  if (carrier == LineKind::AtInfinity) {
    if (is(P::Infinite, P::Infinite) || is(P::Ideal, P::Ideal)) {
      return {ExtLength(0.0), ExtLength(0.0, ImQuantum::Pi)};
    }
    if (is(P::Infinite, P::Ideal)) {
      return {ExtLength(0.0, ImQuantum::HalfPi), ExtLength(0.0, ImQuantum::HalfPi)};
    }
    throw Error(ErrorCode::UnsupportedConfiguration, "a line at infinity carries no real point");
  }
  throw Error(ErrorCode::UnsupportedConfiguration, "ideal carriers give angle-valued lengths");
}

const char* to_string(PointKind k) {
  switch (k) {
    case PointKind::Real: return "real";
    case PointKind::Infinite: return "infinite";
    case PointKind::Ideal: return "ideal";
  }
  return "?";
}

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::Real: return "real";
    case LineKind::AtInfinity: return "at_infinity";
    case LineKind::Ideal: return "ideal";
  }
  return "?";
}

void to_json(nlohmann::json& j, const ExtReal& x) {
  if (x.is_pos_inf()) j = "inf";
  else if (x.is_neg_inf()) j = "-inf";
  else j = x.value();
}

void from_json(const nlohmann::json& j, ExtReal& x) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") x = ExtReal::pos_inf();
    else if (s == "-inf") x = ExtReal::neg_inf();
    else throw Error(ErrorCode::ParseError, "bad extended real: " + s);
    return;
  }
  x = ExtReal(j.get<double>());
}

void to_json(nlohmann::json& j, const ExtLength& x) {
  j = nlohmann::json::object();
  j["re"] = x.re();
  switch (x.im()) {
    case ImQuantum::Zero: j["im"] = 0; break;
    case ImQuantum::HalfPi: j["im"] = "pi/2"; break;
    case ImQuantum::Pi: j["im"] = "pi"; break;
  }
}

void from_json(const nlohmann::json& j, ExtLength& x) {
  ExtReal re = j.at("re").get<ExtReal>();
  const auto& im = j.at("im");
  ImQuantum q = ImQuantum::Zero;
  if (im.is_string()) {
    const auto s = im.get<std::string>();
    if (s == "pi/2") q = ImQuantum::HalfPi;
    else if (s == "pi") q = ImQuantum::Pi;
    else throw Error(ErrorCode::ParseError, "bad imaginary quantum: " + s);
  } else if (im.get<double>() != 0.0) {
    throw Error(ErrorCode::ParseError, "numeric imaginary part must be 0");
  }
  x = ExtLength(re, q);
}

void to_json(nlohmann::json& j, const ExtComplex& x) {
  if (x.is_quantized()) {
    j = x.to_length();
    return;
  }
  j = nlohmann::json::object();
  j["re"] = x.re;
  j["im"] = x.im;
}

}  // namespace hyptri
