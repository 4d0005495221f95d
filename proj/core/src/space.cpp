#include "pangular/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pangular {

namespace {

void check_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw NonFiniteError("vector has a non-finite coordinate");
  }
}

void check_dim(const SpaceSpec& space, std::span<const double> v) {
  if (static_cast<int>(v.size()) != space.dim) {
    std::ostringstream os;
    os << "vector has dimension " << v.size() << ", space expects " << space.dim;
    throw DimensionMismatchError(os.str());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw BadSpecError("cannot parse number '" + s + "'");
  }
  if (pos != s.size()) throw BadSpecError("cannot parse number '" + s + "'");
  return v;
}

int parse_dim(const std::string& s) {
  double v = parse_real(s);
  int d = static_cast<int>(v);
  if (d < 1 || static_cast<double>(d) != v) {
    throw BadSpecError("dimension must be a positive integer, got '" + s + "'");
  }
  return d;
}

}  // namespace

SpaceSpec SpaceSpec::euclidean(int dim) {
  if (dim < 1) throw BadSpecError("dim must be >= 1");
  SpaceSpec s;
  s.kind = NormKind::EUCLIDEAN;
  s.dim = dim;
  return s;
}

SpaceSpec SpaceSpec::lp(double p, int dim) {
  if (dim < 1) throw BadSpecError("dim must be >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) throw BadSpecError("lp norm requires p >= 1");
  SpaceSpec s;
  s.kind = NormKind::LP;
  s.dim = dim;
  s.p_exponent = p;
  return s;
}

SpaceSpec SpaceSpec::linf(int dim) {
  if (dim < 1) throw BadSpecError("dim must be >= 1");
  SpaceSpec s;
  s.kind = NormKind::LINF;
  s.dim = dim;
  return s;
}

SpaceSpec SpaceSpec::weighted_l2(std::vector<double> weights) {
  if (weights.empty()) throw BadSpecError("weighted l2 needs at least one weight");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw BadSpecError("weights must be positive");
  }
  SpaceSpec s;
  s.kind = NormKind::WEIGHTED_L2;
  s.dim = static_cast<int>(weights.size());
  s.weights = std::move(weights);
  return s;
}

SpaceSpec SpaceSpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.empty()) throw BadSpecError("empty space spec");
  const std::string& head = parts[0];
  if (head == "l2") {
    if (parts.size() != 2) throw BadSpecError("expected l2:<dim>");
    return euclidean(parse_dim(parts[1]));
  }
  if (head == "linf") {
    if (parts.size() != 2) throw BadSpecError("expected linf:<dim>");
    return linf(parse_dim(parts[1]));
  }
  if (head == "lp") {
    if (parts.size() != 3) throw BadSpecError("expected lp:<p>:<dim>");
    return lp(parse_real(parts[1]), parse_dim(parts[2]));
  }
  if (head == "wl2") {
    if (parts.size() != 3 || parts[2].rfind("w=", 0) != 0) {
      throw BadSpecError("expected wl2:<dim>:w=<w1,...,wn>");
    }
    int dim = parse_dim(parts[1]);
    auto ws = split(parts[2].substr(2), ',');
    std::vector<double> weights;
    weights.reserve(ws.size());
    for (const auto& w : ws) weights.push_back(parse_real(w));
    if (static_cast<int>(weights.size()) != dim) {
      throw BadSpecError("weight count does not match dim in '" + text + "'");
    }
    return weighted_l2(std::move(weights));
  }
  throw BadSpecError("unknown space kind '" + head + "'");
}

bool SpaceSpec::is_ips() const {
  switch (kind) {
    case NormKind::EUCLIDEAN:
    case NormKind::WEIGHTED_L2:
      return true;
    case NormKind::LP:
      return p_exponent == 2.0;
    case NormKind::LINF:
      return false;
  }
  return false;
}

std::string SpaceSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case NormKind::EUCLIDEAN:
      os << "l2:" << dim;
      break;
    case NormKind::LINF:
      os << "linf:" << dim;
      break;
    case NormKind::LP:
      os << "lp:" << p_exponent << ":" << dim;
      break;
    case NormKind::WEIGHTED_L2: {
      os << "wl2:" << dim << ":w=";
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) os << ",";
        os << weights[i];
      }
      break;
    }
  }
  return os.str();
}

double norm(const SpaceSpec& space, std::span<const double> v) {
  check_dim(space, v);
  check_finite(v);

  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::fabs(x));
  if (peak == 0.0) return 0.0;

  // Scale by the largest coordinate so powers stay in range.
  switch (space.kind) {
    case NormKind::LINF:
      return peak;
    case NormKind::EUCLIDEAN: {
      double s = 0.0;
      for (double x : v) {
        double t = x / peak;
        s += t * t;
      }
      return peak * std::sqrt(s);
    }
    case NormKind::WEIGHTED_L2: {
      double s = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        double t = v[i] / peak;
        s += space.weights[i] * t * t;
      }
      return peak * std::sqrt(s);
    }
    case NormKind::LP: {
      double s = 0.0;
      for (double x : v) s += std::pow(std::fabs(x) / peak, space.p_exponent);
      return peak * std::pow(s, 1.0 / space.p_exponent);
    }
  }
  return 0.0;
}

NormTriple validate_triple(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw TripleInfeasibleError("triple has non-finite entries");
  }
  if (!(a > 0.0) || !(b > 0.0)) {
    throw TripleInfeasibleError("norms a, b must be positive");
  }
  const double lo = std::fabs(a - b);
  const double hi = a + b;
  const double slack = 1e-12 * std::max({a, b, c, 1.0});
  if (c < lo - slack || c > hi + slack) {
    std::ostringstream os;
    os << "triple (" << a << ", " << b << ", " << c
       << ") violates |a-b| <= c <= a+b";
    throw TripleInfeasibleError(os.str());
  }
  NormTriple t;
  t.a = a;
  t.b = b;
  t.c = std::clamp(c, lo, hi);
  return t;
}

NormTriple triple_of(const SpaceSpec& space, std::span<const double> x,
                     std::span<const double> y) {
  double a = norm(space, x);
  double b = norm(space, y);
  double c = norm(space, subtract(x, y));
  return validate_triple(a, b, c);
}

Vec radial_transform(const SpaceSpec& space, std::span<const double> v, double s) {
  double n = norm(space, v);
  if (n == 0.0) throw ZeroVectorError("radial transform of the zero vector");
  double factor = std::pow(n, s - 1.0);
  return scaled(v, factor);
}

Vec scaled(std::span<const double> v, double t) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * t;
  return out;
}

Vec subtract(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionMismatchError("vector size mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

}  // namespace pangular
