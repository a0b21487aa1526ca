// Copyright 2026 The zenohol Authors
// SPDX-License-Identifier: Apache-2.0

#include "zenohol/path.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "zenohol/errors.hpp"

namespace zenohol {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kRangeSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool theta_in_range(double t) { return t >= -kRangeSlack && t <= kHalfPi + kRangeSlack; }

// Index of the first invalid segment and a message, or -1.
long first_violation(const std::vector<PathSegment>& segs, std::string& why) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const bool ok = std::visit(
        overloaded{[](const ThetaRamp& r) { return theta_in_range(r.from) && theta_in_range(r.to); },
                   [](const PhiLoop& l) { return theta_in_range(l.theta); }},
        segs[i]);
    if (!ok) {
      why = "theta outside [0, pi/2] in segment " + std::to_string(i);
      return static_cast<long>(i);
    }
    if (i > 0 && std::abs(end_theta(segs[i - 1]) - start_theta(segs[i])) > kContinuityTolerance) {
      why = "segment " + std::to_string(i) + " starts at theta=" +
            message_number(start_theta(segs[i])) + " but segment " + std::to_string(i - 1) +
            " ends at theta=" + message_number(end_theta(segs[i - 1]));
      return static_cast<long>(i);
    }
  }
  return -1;
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::pair<std::vector<PathSegment>, std::vector<std::size_t>> program() {
    std::vector<PathSegment> segs;
    std::vector<std::size_t> starts;
    skip_ws();
    if (at_end()) return {segs, starts};
    while (true) {
      skip_ws();
      starts.push_back(pos_);
      segs.push_back(segment());
      skip_ws();
      if (at_end()) break;
      expect(";");
    }
    return {segs, starts};
  }

 private:
  PathSegment segment() {
    if (accept("theta")) {
      expect(":");
      const double from = angle();
      expect("->");
      const double to = angle();
      return ThetaRamp{from, to};
    }
    if (accept("phi")) {
      expect(":");
      expect("ma");
      expect("=");
      const int ma = integer();
      expect(",");
      expect("mb");
      expect("=");
      const int mb = integer();
      expect("@");
      expect("theta");
      expect("=");
      return PhiLoop{ma, mb, angle()};
    }
    fail("expected 'theta:' or 'phi:'");
  }

  // number | [number ["*"]] "pi" ["/" number]
  double angle() {
    skip_ws();
    double value = 1.0;
    bool have_number = false;
    if (!peek("pi")) {
      value = number();
      have_number = true;
      skip_ws();
      const bool star = accept("*");
      if (!peek("pi")) {
        if (star) fail("expected 'pi' after '*'");
        return value;
      }
    }
    expect("pi");
    value *= std::numbers::pi;
    if (accept("/")) {
      const double den = number();
      if (den == 0.0) fail("division by zero in angle");
      value /= den;
    }
    (void)have_number;
    return value;
  }

  double number() {
    skip_ws();
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  int integer() {
    skip_ws();
    int v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected an integer winding number");
    if (ptr != last && (*ptr == '.' || *ptr == 'e' || *ptr == 'E')) {
      fail("winding numbers must be integers");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_).starts_with(tok);
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("path syntax error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double start_theta(const PathSegment& seg) {
  return std::visit(overloaded{[](const ThetaRamp& r) { return r.from; },
                               [](const PhiLoop& l) { return l.theta; }},
                    seg);
}

double end_theta(const PathSegment& seg) {
  return std::visit(overloaded{[](const ThetaRamp& r) { return r.to; },
                               [](const PhiLoop& l) { return l.theta; }},
                    seg);
}

ControlParams segment_params(const PathSegment& seg, double s, double omega) {
  ControlParams p;
  p.omega = omega;
  std::visit(overloaded{[&](const ThetaRamp& r) { p.theta = r.from + (r.to - r.from) * s; },
                        [&](const PhiLoop& l) {
                          p.theta = l.theta;
                          p.phi_a = 2 * std::numbers::pi * l.m_a * s;
                          p.phi_b = 2 * std::numbers::pi * l.m_b * s;
                        }},
             seg);
  return p;
}

double parameter_arc(const PathSegment& seg) {
  return std::visit(
      overloaded{[](const ThetaRamp& r) { return std::abs(r.to - r.from); },
                 [](const PhiLoop& l) {
                   return 2 * std::numbers::pi * (std::abs(l.m_a) + std::abs(l.m_b));
                 }},
      seg);
}

PathSegment reversed(const PathSegment& seg) {
  return std::visit(overloaded{[](const ThetaRamp& r) -> PathSegment { return ThetaRamp{r.to, r.from}; },
                               [](const PhiLoop& l) -> PathSegment {
                                 return PhiLoop{-l.m_a, -l.m_b, l.theta};
                               }},
                    seg);
}

PathProgram::PathProgram(std::vector<PathSegment> segments) : segments_(std::move(segments)) {
  std::string why;
  const long bad = first_violation(segments_, why);
  if (bad >= 0) throw ParseError("invalid path: " + why, 0, bad);
}

std::optional<double> PathProgram::start_theta() const {
  if (segments_.empty()) return std::nullopt;
  return zenohol::start_theta(segments_.front());
}

std::optional<double> PathProgram::end_theta() const {
  if (segments_.empty()) return std::nullopt;
  return zenohol::end_theta(segments_.back());
}

PathProgram PathProgram::reversed() const {
  std::vector<PathSegment> out;
  out.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) out.push_back(zenohol::reversed(*it));
  return PathProgram(std::move(out));
}

PathProgram PathProgram::then(const PathProgram& next) const {
  std::vector<PathSegment> out = segments_;
  out.insert(out.end(), next.segments_.begin(), next.segments_.end());
  return PathProgram(std::move(out));
}

PathProgram parse_path(std::string_view text) {
  auto [segs, starts] = Parser(text).program();
  std::string why;
  const long bad = first_violation(segs, why);
  if (bad >= 0) {
    throw ParseError("path error at position " + std::to_string(starts[static_cast<std::size_t>(bad)]) +
                         ": " + why,
                     starts[static_cast<std::size_t>(bad)], bad);
  }
  return PathProgram(std::move(segs));
}

std::string format_path(const PathProgram& program) {
  std::string out;
  for (const auto& seg : program.segments()) {
    if (!out.empty()) out += "; ";
    std::visit(overloaded{[&](const ThetaRamp& r) {
                            out += "theta:" + shortest(r.from) + "->" + shortest(r.to);
                          },
                          [&](const PhiLoop& l) {
                            out += "phi:ma=" + std::to_string(l.m_a) + ",mb=" + std::to_string(l.m_b) +
                                   "@theta=" + shortest(l.theta);
                          }},
               seg);
  }
  return out;
}

PathProgram theta_path(double from, double to) { return PathProgram({ThetaRamp{from, to}}); }

PathProgram phi_path(int m_a, int m_b, double theta) { return PathProgram({PhiLoop{m_a, m_b, theta}}); }

PathProgram w_path(int m_a, int m_b, double theta_1) {
  constexpr double q = std::numbers::pi / 4;
  return PathProgram({ThetaRamp{q, theta_1}, PhiLoop{m_a, m_b, theta_1}, ThetaRamp{theta_1, q}});
}

PathProgram w_prime_path(int m_a, int m_b, double theta_1) {
  constexpr double q = std::numbers::pi / 4;
  return PathProgram({ThetaRamp{0.0, theta_1}, PhiLoop{m_a, m_b, theta_1}, ThetaRamp{theta_1, q}});
}

}  // namespace zenohol
