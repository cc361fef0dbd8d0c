// Copyright 2026 The compsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compsum/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "compsum/arithmetic.hpp"
#include "compsum/eft.hpp"

namespace compsum {

namespace {

class Check {
 public:
  Check(std::string name, const dekker::SystemParams& p) {
    r_.name = std::move(name);
    r_.system = p.to_string();
  }

  // The message is built only for the first failure.
  void expect(bool ok, const std::function<std::string()>& message) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.counterexample = message();
  }

  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

class SystemChecker {
 public:
  SystemChecker(const dekker::SystemParams& p, dekker::TieBreak tie)
      : p_(p), tie_(tie), arith_(p, tie), eps_(p.unit_roundoff()),
        numbers_(dekker::enumerate_numbers(p)) {
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) values_.insert(ev(x) + ev(y));
    }
    if (p.beta() % 2 == 0) {
      // Midpoints between neighbours: where the tie rule decides.
      for (std::size_t i = 0; i + 1 < numbers_.size(); ++i) {
        values_.insert(half(ev(numbers_[i]) + ev(numbers_[i + 1])));
      }
    }
    const ExactValue top = dekker::max_magnitude(p);
    for (int k = 1; k <= 3; ++k) {
      const ExactValue beyond = top + ExactValue(BigInt(k), p.emax(), p.beta());
      values_.insert(beyond);
      values_.insert(-beyond);
    }
  }

  TheoremReport run() {
    TheoremReport report;
    auto add = [&](Check c) { report.results.push_back(c.result()); };
    add(symmetry());
    add(monotonicity());
    add(integer_rounding());
    add(nearest());
    add(idempotence());
    add(equivalence());
    add(exponent_growth());
    add(exact_subtraction());
    add(exact_small_exponent());
    add(exact_at_emin());
    add(error_bounds_general());
    add(error_bound_output());
    add(error_bound_input());
    add(interval(Rational(1, 2), "interval-half-ulp"));
    add(interval(Rational(1), "interval-one-ulp"));
    add(fast_two_sum_exact());
    add(two_sum_exact());
    add(residual_bounds());
    add(eft_consistency());
    return report;
  }

 private:
  ExactValue ev(const dekker::Repr& x) const { return dekker::to_exact(p_, x); }
  dekker::Repr fl(const ExactValue& v) const { return dekker::round_exact(p_, v, tie_); }
  dekker::Repr add(const dekker::Repr& x, const dekker::Repr& y) const { return arith_.add(x, y); }
  dekker::Repr sub(const dekker::Repr& x, const dekker::Repr& y) const { return arith_.sub(x, y); }
  ExactValue pow_beta(std::int64_t e) const { return ExactValue(BigInt(1), e, p_.beta()); }
  std::int64_t min_exp(const dekker::Repr& x) const { return dekker::exponent_span(p_, x).first; }
  std::int64_t max_exp(const dekker::Repr& x) const { return dekker::exponent_span(p_, x).second; }
  bool overflows(const ExactValue& v) const { return dekker::overflows(p_, v); }
  // No normal representation; zero counts.
  bool is_subnormal(const dekker::Repr& x) const {
    return boost::multiprecision::abs(dekker::canonicalize(p_, x).m) < ipow(p_.beta(), p_.t() - 1);
  }
  // a <= c * b, exactly.
  static bool at_most(const ExactValue& a, const Rational& c, const ExactValue& b) {
    return a.to_rational() <= c * b.to_rational();
  }
  static ExactValue half(const ExactValue& v) {
    // Only used for even beta: v * (beta/2) / beta.
    return v.scaled(BigInt(v.beta() / 2)).shifted(-1);
  }
  std::string show(const dekker::Repr& x) const { return dekker::to_string(x, p_.beta()); }
  static std::string show(const ExactValue& v) { return v.to_string(); }
  std::string pair(const dekker::Repr& x, const dekker::Repr& y) const {
    return "x=" + show(x) + " y=" + show(y);
  }

  // fl(-v) = -fl(v).
  Check symmetry() const {
    Check c("symmetry", p_);
    for (const auto& v : values_) {
      const auto a = fl(-v);
      const auto b = dekker::negate(fl(v));
      c.expect(dekker::same_value(p_, a, b), [&] {
        return "v=" + show(v) + ": fl(-v)=" + show(a) + " but -fl(v)=" + show(b);
      });
    }
    return c;
  }

  // |v1| <= |v2| implies |fl(v1)| <= |fl(v2)|; consecutive pairs by |v|
  // suffice by transitivity.
  Check monotonicity() const {
    Check c("monotonicity", p_);
    std::vector<ExactValue> by_magnitude(values_.begin(), values_.end());
    std::stable_sort(by_magnitude.begin(), by_magnitude.end(),
                     [](const ExactValue& a, const ExactValue& b) { return a.abs() < b.abs(); });
    for (std::size_t i = 0; i + 1 < by_magnitude.size(); ++i) {
      const auto& v1 = by_magnitude[i];
      const auto& v2 = by_magnitude[i + 1];
      const auto a = ev(fl(v1)).abs();
      const auto b = ev(fl(v2)).abs();
      c.expect(a <= b, [&] {
        return "v1=" + show(v1) + " v2=" + show(v2) + ": |fl(v1)|=" + show(a) +
               " > |fl(v2)|=" + show(b);
      });
    }
    return c;
  }

  // For non-overflowing v and every representation m*beta^e of z = fl(v),
  // m is a nearest integer to v / beta^e.
  Check integer_rounding() const {
    Check c("integer-rounding", p_);
    for (const auto& v : values_) {
      if (overflows(v)) continue;
      const auto z = fl(v);
      for (const auto& r : dekker::representations(p_, z)) {
        // |m - v/beta^e| <= 1/2  <=>  2|m*beta^e - v| <= beta^e.
        const ExactValue gap = (ExactValue(r.m, r.e, p_.beta()) - v).abs();
        c.expect(gap.scaled(2) <= pow_beta(r.e), [&] {
          return "v=" + show(v) + " z=" + show(z) + ": representation " + show(r) +
                 " is not a rounding of the scaled value";
        });
      }
    }
    return c;
  }

  // fl(v) is an element at minimal distance, found through its neighbours in
  // the sorted element list.
  Check nearest() const {
    Check c("nearest", p_);
    std::vector<ExactValue> sorted;
    for (const auto& x : numbers_) sorted.push_back(ev(x));
    for (const auto& v : values_) {
      const ExactValue got = ev(fl(v));
      auto hi = std::lower_bound(sorted.begin(), sorted.end(), v);
      ExactValue best_gap;
      bool first = true;
      for (auto it : {hi, hi == sorted.begin() ? hi : hi - 1}) {
        if (it == sorted.end()) continue;
        const ExactValue gap = (*it - v).abs();
        if (first || gap < best_gap) best_gap = gap;
        first = false;
      }
      c.expect((got - v).abs() == best_gap, [&] {
        return "v=" + show(v) + ": fl(v)=" + show(got) + " is not a nearest element";
      });
    }
    return c;
  }

  Check idempotence() const {
    Check c("idempotence", p_);
    for (const auto& x : numbers_) {
      const auto r = fl(ev(x));
      c.expect(r == dekker::canonicalize(p_, x),
               [&] { return "x=" + show(x) + ": fl(x)=" + show(r); });
    }
    return c;
  }

  // The canonical enumeration holds exactly the values of all valid
  // representations (nonunique system vs unique-representation system).
  Check equivalence() const {
    Check c("equivalence", p_);
    std::set<ExactValue> brute;
    const auto M = static_cast<std::int64_t>(p_.M());
    for (std::int64_t e = p_.emin(); e <= p_.emax(); ++e) {
      for (std::int64_t m = -(M - 1); m < M; ++m) brute.insert(ExactValue(BigInt(m), e, p_.beta()));
    }
    std::set<ExactValue> listed;
    for (const auto& x : numbers_) listed.insert(ev(x));
    c.expect(brute == listed, [&] {
      return "enumeration has " + std::to_string(listed.size()) + " values, brute force " +
             std::to_string(brute.size());
    });
    c.expect(std::is_sorted(numbers_.begin(), numbers_.end(),
                            [&](const auto& a, const auto& b) { return ev(a) < ev(b); }) &&
                 numbers_.size() == listed.size(),
             [&] { return std::string("enumeration is not strictly ascending"); });
    return c;
  }

  // For representations with e(x) >= e(y), z = fl(x+y) has a representation
  // with exponent <= e(x) + 1. Over all representation exponents of x, the
  // binding case is the smallest e(x) for which some e(y) <= e(x) exists.
  Check exponent_growth() const {
    Check c("exponent-growth", p_);
    for (const auto& x : numbers_) {
      const auto [xl, xh] = dekker::exponent_span(p_, x);
      for (const auto& y : numbers_) {
        const auto yl = min_exp(y);
        const auto z = add(x, y);
        const auto zl = min_exp(z);
        for (auto ex = std::max(xl, yl); ex <= xh; ++ex) {
          c.expect(zl <= ex + 1, [&] {
            return pair(x, y) + " e(x)=" + std::to_string(ex) + ": z=" + show(z) +
                   " needs exponent " + std::to_string(zl);
          });
        }
      }
    }
    return c;
  }

  // z = x + y exactly implies fl(z - x) = y and fl(z - y) = x.
  Check exact_subtraction() const {
    Check c("exact-subtraction", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const auto z = add(x, y);
        if (ev(z) != ev(x) + ev(y)) continue;
        const auto a = sub(z, x);
        const auto b = sub(z, y);
        c.expect(dekker::same_value(p_, a, y) && dekker::same_value(p_, b, x), [&] {
          return pair(x, y) + ": fl(z-x)=" + show(a) + " fl(z-y)=" + show(b);
        });
      }
    }
    return c;
  }

  // Without overflow, representations with e(z) <= min(e(x), e(y)) force
  // z = x + y.
  Check exact_small_exponent() const {
    Check c("exact-small-exponent", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const ExactValue s = ev(x) + ev(y);
        if (overflows(s)) continue;
        const auto z = add(x, y);
        if (min_exp(z) > std::min(max_exp(x), max_exp(y))) continue;
        c.expect(ev(z) == s, [&] { return pair(x, y) + ": z=" + show(z) + " is inexact"; });
      }
    }
    return c;
  }

  // Without overflow, z representable at emin forces z = x + y. (A clipped
  // sum can land on an emin-representable value when emin == emax.)
  Check exact_at_emin() const {
    Check c("exact-at-emin", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        if (overflows(ev(x) + ev(y))) continue;
        const auto z = add(x, y);
        if (min_exp(z) != p_.emin()) continue;
        c.expect(ev(z) == ev(x) + ev(y),
                 [&] { return pair(x, y) + ": z=" + show(z) + " is inexact"; });
      }
    }
    return c;
  }

  // Any non-overflowing v: |fl(v) - v| <= beta^e(z) / 2, and <= eps |fl(v)|
  // when fl(v) is not subnormal.
  Check error_bounds_general() const {
    Check c("error-bound-rounding", p_);
    for (const auto& v : values_) {
      if (overflows(v)) continue;
      const auto z = fl(v);
      const ExactValue err = (ev(z) - v).abs();
      const auto e = dekker::canonicalize(p_, z).e;
      c.expect(err.scaled(2) <= pow_beta(e), [&] {
        return "v=" + show(v) + " z=" + show(z) + ": error exceeds half of beta^e(z)";
      });
      if (!is_subnormal(z)) {
        c.expect(at_most(err, eps_, ev(z).abs()),
                 [&] { return "v=" + show(v) + " z=" + show(z) + ": error exceeds eps|z|"; });
      }
    }
    return c;
  }

  // For sums, |z - (x+y)| <= eps |z| even when z is subnormal.
  Check error_bound_output() const {
    Check c("error-bound-output", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const ExactValue s = ev(x) + ev(y);
        if (overflows(s)) continue;
        const auto z = add(x, y);
        const ExactValue err = (ev(z) - s).abs();
        c.expect(err.scaled(2) <= pow_beta(dekker::canonicalize(p_, z).e) &&
                     at_most(err, eps_, ev(z).abs()),
                 [&] { return pair(x, y) + ": z=" + show(z) + " error too large"; });
      }
    }
    return c;
  }

  // |z - (x+y)| <= eps |x + y|.
  Check error_bound_input() const {
    Check c("error-bound-input", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const ExactValue s = ev(x) + ev(y);
        if (overflows(s)) continue;
        const auto z = add(x, y);
        c.expect(at_most((ev(z) - s).abs(), eps_, s.abs()),
                 [&] { return pair(x, y) + ": z=" + show(z) + " error exceeds eps|x+y|"; });
      }
    }
    return c;
  }

  // Binary only. For normal y with e(y) > emin, every w within
  // width*beta^e(y) of y rounds to a number with a normal representation at
  // exponent e(y)-1, e(y) or e(y)+1, and y - fl(w) is 0, +-beta^(e(y)-1) or
  // +-beta^e(y). The unit width needs t > 1.
  Check interval(const Rational& width, const std::string& name) const {
    Check c(name, p_);
    if (p_.beta() != 2 || (width == 1 && p_.t() < 2)) return c;
    const BigInt lower = ipow(2, p_.t() - 1);
    for (const auto& y : numbers_) {
      if (y.m.is_zero() || boost::multiprecision::abs(y.m) < lower || y.e <= p_.emin()) continue;
      // Rounding is constant between midpoints, which are multiples of
      // beta^emin / 2; a quarter-step grid hits every breakpoint and every gap.
      const std::int64_t quarter = p_.emin() - 2;
      const BigInt reach = BigInt(4) * ipow(2, y.e - p_.emin()) *
                           boost::multiprecision::numerator(width) /
                           boost::multiprecision::denominator(width);
      for (BigInt k = -reach; k <= reach; ++k) {
        const ExactValue w = ev(y) + ExactValue(k, quarter, 2);
        const auto z = fl(w);
        const auto cz = dekker::canonicalize(p_, z);
        const bool normal = boost::multiprecision::abs(cz.m) >= lower;
        const bool exponent_ok = cz.e >= y.e - 1 && cz.e <= y.e + 1;
        const ExactValue diff = (ev(y) - ev(z)).abs();
        const bool diff_ok = diff.is_zero() || diff == pow_beta(y.e - 1) || diff == pow_beta(y.e);
        c.expect(normal && exponent_ok && diff_ok, [&] {
          return "y=" + show(y) + " w=" + show(w) + ": fl(w)=" + show(z);
        });
      }
    }
    return c;
  }

  // 3op EFT: exact whenever representations with e(x) >= e(y) exist.
  Check fast_two_sum_exact() const {
    Check c("fast-two-sum-exact", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        if (max_exp(x) < min_exp(y)) continue;
        const auto r = fast_two_sum(arith_, x, y);
        c.expect(ev(r.z) + ev(r.zz) == ev(x) + ev(y), [&] {
          return pair(x, y) + ": z=" + show(r.z) + " zz=" + show(r.zz);
        });
      }
    }
    return c;
  }

  // 6op EFT: exact for every pair, clipping overflow included.
  Check two_sum_exact() const {
    Check c("two-sum-exact", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const auto r = two_sum(arith_, x, y);
        c.expect(ev(r.z) + ev(r.zz) == ev(x) + ev(y), [&] {
          return pair(x, y) + ": z=" + show(r.z) + " zz=" + show(r.zz);
        });
      }
    }
    return c;
  }

  // Without overflow: |zz| <= beta^e(z) / 2, |zz| <= eps |z|, |zz| <= eps |x+y|,
  // for both EFTs under their conditions.
  Check residual_bounds() const {
    Check c("residual-bounds", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const ExactValue s = ev(x) + ev(y);
        if (overflows(s)) continue;
        auto verify = [&](const EftResult<dekker::Repr>& r, const char* which) {
          const ExactValue zz = ev(r.zz).abs();
          const bool ok = zz.scaled(2) <= pow_beta(dekker::canonicalize(p_, r.z).e) &&
                          at_most(zz, eps_, ev(r.z).abs()) && at_most(zz, eps_, s.abs());
          c.expect(ok, [&] {
            return std::string(which) + " " + pair(x, y) + ": z=" + show(r.z) +
                   " zz=" + show(r.zz);
          });
        };
        verify(two_sum(arith_, x, y), "two_sum");
        if (max_exp(x) >= min_exp(y)) verify(fast_two_sum(arith_, x, y), "fast_two_sum");
      }
    }
    return c;
  }

  // two_sum is symmetric in its operands and both EFTs agree on z.
  Check eft_consistency() const {
    Check c("eft-consistency", p_);
    for (const auto& x : numbers_) {
      for (const auto& y : numbers_) {
        const auto a = two_sum(arith_, x, y);
        const auto b = two_sum(arith_, y, x);
        const auto f = fast_two_sum(arith_, x, y);
        c.expect(a == b && f.z == a.z, [&] {
          return pair(x, y) + ": two_sum(x,y)=(" + show(a.z) + "," + show(a.zz) +
                 ") two_sum(y,x)=(" + show(b.z) + "," + show(b.zz) + ") fast z=" + show(f.z);
        });
      }
    }
    return c;
  }

  dekker::SystemParams p_;
  dekker::TieBreak tie_;
  DekkerArithmetic arith_;
  Rational eps_;
  std::vector<dekker::Repr> numbers_;
  std::set<ExactValue> values_;
};

}  // namespace

bool TheoremReport::all_passed() const { return failures() == 0; }

std::uint64_t TheoremReport::failures() const {
  std::uint64_t n = 0;
  for (const auto& r : results) n += r.failures;
  return n;
}

void TheoremReport::append(const TheoremReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

const std::vector<std::string>& theorem_check_names() {
  static const std::vector<std::string> names = {
      "symmetry",          "monotonicity",          "integer-rounding",
      "nearest",           "idempotence",           "equivalence",
      "exponent-growth",   "exact-subtraction",     "exact-small-exponent",
      "exact-at-emin",     "error-bound-rounding",  "error-bound-output",
      "error-bound-input", "interval-half-ulp",     "interval-one-ulp",
      "fast-two-sum-exact", "two-sum-exact",        "residual-bounds",
      "eft-consistency"};
  return names;
}

TheoremReport check_system(const dekker::SystemParams& p, dekker::TieBreak tie) {
  return SystemChecker(p, tie).run();
}

std::vector<dekker::SystemParams> grid_systems(const TheoremGrid& g) {
  std::vector<dekker::SystemParams> out;
  for (int t = g.t_min; t <= g.t_max; ++t) {
    for (auto emin = g.emin_min; emin <= g.emin_max; ++emin) {
      for (auto emax = g.emax_min; emax <= g.emax_max; ++emax) {
        if (emin <= emax) out.emplace_back(g.beta, t, emin, emax);
      }
    }
  }
  return out;
}

TheoremReport check_grid(const TheoremGrid& grid, dekker::TieBreak tie) {
  TheoremReport report;
  for (const auto& p : grid_systems(grid)) report.append(check_system(p, tie));
  return report;
}

void print_report(std::ostream& os, const TheoremReport& report, bool per_system) {
  if (per_system) {
    for (const auto& r : report.results) {
      os << (r.passed() ? "PASS " : "FAIL ") << r.name << " [" << r.system << "] cases=" << r.cases
         << " failures=" << r.failures << '\n';
      if (!r.passed()) os << "  counterexample: " << r.counterexample << '\n';
    }
    return;
  }
  struct Totals {
    std::uint64_t systems = 0, cases = 0, failures = 0;
    std::string first;
  };
  std::map<std::string, Totals> totals;
  for (const auto& r : report.results) {
    auto& t = totals[r.name];
    ++t.systems;
    t.cases += r.cases;
    t.failures += r.failures;
    if (!r.passed() && t.first.empty()) t.first = "[" + r.system + "] " + r.counterexample;
  }
  for (const auto& name : theorem_check_names()) {
    const auto it = totals.find(name);
    if (it == totals.end()) continue;
    const auto& t = it->second;
    os << (t.failures == 0 ? "PASS " : "FAIL ") << name << " systems=" << t.systems
       << " cases=" << t.cases << " failures=" << t.failures << '\n';
    if (t.failures) os << "  counterexample: " << t.first << '\n';
  }
}

}  // namespace compsum
