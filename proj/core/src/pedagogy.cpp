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

#include "compsum/pedagogy.hpp"

#include <sstream>
#include <stdexcept>

namespace compsum {

namespace {

std::string power_of_two(std::int64_t k, int t) {
  if (k <= 1) return "2^" + std::to_string(k);
  const std::int64_t d = k - t;
  if (d == 0) return "2^t";
  return "2^(t" + std::string(d > 0 ? "+" : "-") + std::to_string(d > 0 ? d : -d) + ")";
}

// Exponent k if a == 2^k, else -1.
std::int64_t log2_exact(const BigInt& a) {
  if (a <= 0) return -1;
  const auto low = boost::multiprecision::lsb(a);
  const auto high = boost::multiprecision::msb(a);
  return low == high ? static_cast<std::int64_t>(high) : -1;
}

dekker::Repr pow2(int t, std::int64_t k, int sign = 1) {
  const DekkerArithmetic arith(pedagogy_system(t));
  return arith.make(sign, k);
}

}  // namespace

dekker::SystemParams pedagogy_system(int t) {
  if (t < 2) throw std::invalid_argument("pedagogy: t must be >= 2");
  return {2, t, -(t + 2), t + 4};
}

std::string symbolic(const dekker::Repr& v, int t) {
  const ExactValue x(v.m, v.e, 2);
  if (x.is_zero()) return "0";
  const std::string sign = x.sign() < 0 ? "-" : "";
  const BigInt odd = boost::multiprecision::abs(x.n());
  if (odd == 1) return sign + power_of_two(x.q(), t);
  const std::int64_t k = log2_exact(odd + 1);
  std::string body;
  if (k > 0) {
    const std::string inner = k == t ? "2^t" : "2^" + std::to_string(k);
    body = "(" + inner + "-1)";
  } else {
    body = odd.str();
  }
  return sign + body + "x2^" + std::to_string(x.q());
}

TraceTable trace(Algorithm algorithm, const std::vector<dekker::Repr>& xs, int t,
                 std::string title) {
  TraceTable table;
  table.title = std::move(title);
  table.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::plain: table.columns = {"s"}; break;
    case Algorithm::kahan3op:
    case Algorithm::comp6op: table.columns = {"y", "s", "e"}; break;
    case Algorithm::double6op: table.columns = {"t", "v", "w", "s", "e"}; break;
    case Algorithm::triple6op: table.columns = {"y", "u", "t", "v", "w", "s", "e"}; break;
  }
  Accumulator<DekkerArithmetic> acc(algorithm, DekkerArithmetic(pedagogy_system(t)));
  for (const auto& x : xs) {
    const auto step = acc.add_traced(x);
    std::vector<std::string> row;
    for (const auto& c : table.columns) {
      const std::optional<dekker::Repr>* field = nullptr;
      if (c == "y") field = &step.y;
      else if (c == "u") field = &step.u;
      else if (c == "t") field = &step.t;
      else if (c == "v") field = &step.v;
      else if (c == "w") field = &step.w;
      if (field) row.push_back(symbolic(field->value(), t));
      else row.push_back(symbolic(c == "s" ? step.s : step.e, t));
    }
    table.rows.push_back(std::move(row));
  }
  const auto [s, e] = acc.finish();
  table.final_s = s;
  table.final_e = e;
  return table;
}

std::vector<dekker::Repr> pedagogy_sequence_a(int t) {
  return {pow2(t, t + 1), pow2(t, 0, -1), pow2(t, 0, -1)};
}

std::vector<dekker::Repr> pedagogy_sequence_b(int t) {
  return {pow2(t, 0), pow2(t, t + 1), pow2(t, t + 1, -1), pow2(t, 0, -1)};
}

std::vector<TraceTable> pedagogy_traces(int t) {
  const auto a = pedagogy_sequence_a(t);
  const auto b = pedagogy_sequence_b(t);
  const std::string sa = "[2^(t+1), -2^0, -2^0]";
  const std::string sb = "[2^0, 2^(t+1), -2^(t+1), -2^0]";
  return {
      trace(Algorithm::plain, a, t, "plain over " + sa),
      trace(Algorithm::kahan3op, a, t, "kahan over " + sa),
      trace(Algorithm::comp6op, a, t, "6op over " + sa),
      trace(Algorithm::comp6op, b, t, "6op over " + sb),
      trace(Algorithm::double6op, b, t, "double6op over " + sb),
      trace(Algorithm::triple6op, b, t, "triple6op over " + sb),
  };
}

std::string render(const TraceTable& table) {
  std::ostringstream os;
  os << table.title << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    os << "i=" << i + 1 << ":";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      os << "  " << table.columns[c] << '=' << table.rows[i][c];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_all(const std::vector<TraceTable>& tables, int t) {
  std::ostringstream os;
  os << "# beta=2 t=" << t << " (2^(t+1) = " << (1LL << (t + 1)) << ")\n";
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i) os << '\n';
    os << render(tables[i]);
  }
  return os.str();
}

}  // namespace compsum
