// SPDX-License-Identifier: Apache-2.0

#include "orbit/verification.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "orbit/functionals.hpp"

namespace orbit {
namespace {

Rat tail_at(const std::vector<Rat>& suffix, std::int64_t k) {
  if (k > static_cast<std::int64_t>(suffix.size()) - 1) return Rat(0);
  return suffix[static_cast<std::size_t>(k - 1)];
}

std::string describe(const Rat& claimed, const Rat& recomputed) {
  return "claimed " + rat_to_string(claimed) + ", recomputed " +
         rat_to_string(recomputed);
}

}  // namespace

BruteFunctionalTable::BruteFunctionalTable(const FiniteSequence& x) {
  std::vector<Rat> mass;
  for (const Rat& v : x.values()) {
    if (v != 0) mass.push_back(abs(v));
  }
  if (mass.size() > 16)
    throw std::invalid_argument("support too large for exhaustive sweep");

  const std::size_t s = mass.size();
  std::vector<Rat> inside(std::size_t(1) << s, Rat(0));
  Rat total(0);
  for (const Rat& v : mass) total += v;

  min_outside_.assign(s + 1, total);
  for (std::size_t m = 1; m < inside.size(); ++m) {
    const std::size_t low = std::countr_zero(m);
    inside[m] = inside[m & (m - 1)] + mass[low];
    const std::size_t c = static_cast<std::size_t>(std::popcount(m));
    min_outside_[c] = std::min(min_outside_[c], Rat(total - inside[m]));
  }
}

Rat BruteFunctionalTable::k_value(const Rat& t) const {
  if (t < 0) throw std::invalid_argument("negative argument");
  Rat best = min_outside_[0] * t;  // empty subset
  for (std::size_t c = 1; c < min_outside_.size(); ++c)
    best = std::min(best, Rat(Rat(static_cast<long>(c)) + t * min_outside_[c]));
  return best;
}

Rat BruteFunctionalTable::e_value(const Rat& t) const {
  if (t < 0) throw std::invalid_argument("negative argument");
  const std::size_t cap = std::min<std::size_t>(
      min_outside_.size() - 1,
      static_cast<std::size_t>(std::max<std::int64_t>(rat_floor(t), 0)));
  Rat best = min_outside_[0];
  for (std::size_t c = 1; c <= cap; ++c) best = std::min(best, min_outside_[c]);
  return best;
}

Rat brute_k_functional(const FiniteSequence& x, const Rat& t) {
  return BruteFunctionalTable(x).k_value(t);
}

Rat brute_e_functional(const FiniteSequence& x, const Rat& t) {
  return BruteFunctionalTable(x).e_value(t);
}

Rat e_star_by_minorant(const FiniteSequence& x, const Rat& t) {
  if (t < 0) throw std::invalid_argument("negative argument");
  const std::vector<Rat> tails = suffix_sums(rearrange(x).profile());
  const std::int64_t support = static_cast<std::int64_t>(tails.size()) - 1;
  if (t >= support) return Rat(0);
  const std::int64_t k = rat_floor(t);
  const Rat left = tail_at(tails, k + 1);
  const Rat right = tail_at(tails, k + 2);
  return left + (t - k) * (right - left);
}

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
  // splitmix64
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::below(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("empty range");
  return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
}

Rat Rng::rat(long max_num, long max_den) {
  return make_rat(below(max_num + 1), 1 + below(max_den));
}

FiniteSequence random_sequence(Rng& rng, std::int64_t max_len, long max_num,
                               bool allow_negative) {
  const std::int64_t n = rng.below(max_len + 1);
  std::vector<Rat> values;
  values.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (rng.below(4) == 0) {
      values.emplace_back(0);
      continue;
    }
    Rat v = rng.rat(max_num, 4);
    if (allow_negative && rng.below(2) == 0) v = -v;
    values.push_back(std::move(v));
  }
  return FiniteSequence(std::move(values));
}

SparseOperator random_sparse_operator(Rng& rng, std::int64_t max_dim,
                                      long max_num) {
  const std::int64_t n_in = 1 + rng.below(max_dim);
  const std::int64_t n_out = 1 + rng.below(max_dim);
  SparseOperator T(n_in, n_out);
  for (std::int64_t out = 1; out <= n_out; ++out) {
    const std::int64_t degree = rng.below(4);
    for (std::int64_t d = 0; d < degree; ++d) {
      const std::int64_t in = 1 + rng.below(n_in);
      Rat coeff = make_rat(1 + rng.below(max_num), 1 + rng.below(4));
      if (rng.below(2) == 0) coeff = -coeff;
      bool taken = false;
      for (const OperatorEntry& e : T.rows()[static_cast<std::size_t>(out - 1)])
        taken |= e.in == in;
      if (!taken) T.add(out, in, std::move(coeff));
    }
  }
  return T;
}

DominatedPairGenerator::DominatedPairGenerator(std::uint64_t seed,
                                               std::int64_t max_len,
                                               long max_num)
    : rng_(seed), max_len_(max_len), max_num_(max_num) {}

std::pair<FiniteSequence, FiniteSequence> DominatedPairGenerator::next() {
  const std::int64_t n = 1 + rng_.below(max_len_);
  std::vector<Rat> b;
  b.reserve(static_cast<std::size_t>(n));
  static const long dens[] = {1, 2, 4, 8, 16, 32, 64};
  for (std::int64_t i = 0; i < n; ++i)
    b.push_back(make_rat(1 + rng_.below(max_num_), dens[rng_.below(7)]));
  std::sort(b.begin(), b.end(), std::greater<>());

  std::vector<Rat> a = b;
  const std::vector<Rat> tails_b = suffix_sums(b);
  const std::int64_t ops = 1 + rng_.below(n + 1);
  for (std::int64_t op = 0; op < ops; ++op) {
    const std::int64_t kind = rng_.below(3);
    const Rat share = make_rat(1 + rng_.below(4), 4);
    if (kind == 0) {
      // delete mass: always keeps every tail below b's
      const std::size_t i = static_cast<std::size_t>(rng_.below(n));
      a[i] -= a[i] * share;
    } else if (kind == 1) {
      // move mass toward the front: tails in between only shrink
      const std::size_t j = static_cast<std::size_t>(rng_.below(n));
      const std::size_t i = static_cast<std::size_t>(rng_.below(
          static_cast<std::int64_t>(j) + 1));
      const Rat amount = a[j] * share;
      a[j] -= amount;
      a[i] += amount;
    } else {
      // move mass toward the back, capped by the tail slack in between
      const std::size_t i = static_cast<std::size_t>(rng_.below(n));
      const std::size_t j =
          i + static_cast<std::size_t>(rng_.below(n - static_cast<std::int64_t>(i)));
      if (i == j) continue;
      const std::vector<Rat> tails_a = suffix_sums(a);
      Rat slack = tails_b[i + 1] - tails_a[i + 1];
      for (std::size_t k = i + 2; k <= j; ++k)
        slack = std::min(slack, Rat(tails_b[k] - tails_a[k]));
      if (slack <= 0) continue;
      const Rat amount = std::min(Rat(a[i]), slack) * share;
      a[i] -= amount;
      a[j] += amount;
    }
    std::sort(a.begin(), a.end(), std::greater<>());
  }

  const FiniteSequence sa{std::vector<Rat>(a)};
  const FiniteSequence sb{std::vector<Rat>(b)};
  const std::vector<Rat> ta = suffix_sums(rearrange(sa).profile());
  const std::vector<Rat> tb = suffix_sums(rearrange(sb).profile());
  for (std::int64_t k = 1; k < static_cast<std::int64_t>(ta.size()); ++k) {
    if (tail_at(ta, k) > tail_at(tb, k))
      throw std::logic_error("generator produced a non-dominated pair");
  }
  return {sa, sb};
}

bool report_passes(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const ReportEntry& e) { return e.pass; });
}

Report verify_certificate(const OperatorCertificate& cert,
                          const FiniteSequence& a, const FiniteSequence& b) {
  Report report;

  ReportEntry image{"image", true, "operator maps b to a"};
  try {
    const FiniteSequence got = apply(cert.op, b);
    if (got != a) {
      image.pass = false;
      const std::int64_t n = std::max(got.length(), a.length());
      for (std::int64_t i = 1; i <= n; ++i) {
        if (got.at(i) != a.at(i)) {
          image.details = "first mismatch at index " + std::to_string(i) +
                          ": got " + rat_to_string(got.at(i)) + ", want " +
                          rat_to_string(a.at(i));
          break;
        }
      }
    }
  } catch (const std::exception& e) {
    image.pass = false;
    image.details = e.what();
  }
  report.push_back(std::move(image));

  const Rat l1 = l1_operator_norm(cert.op);
  report.push_back({"l1_bound", l1 == cert.l1_bound, describe(cert.l1_bound, l1)});

  const std::int64_t l0 = l0_expansion_bound(cert.op);
  report.push_back({"l0_expansion", l0 == cert.l0_expansion,
                    describe(Rat(cert.l0_expansion), Rat(l0))});
  return report;
}

OrbitVerdict prop1_check(const SparseOperator& T, const FiniteSequence& b) {
  const FiniteSequence a = apply(T, b);
  const Rat M = std::max(l1_operator_norm(T), Rat(l0_expansion_bound(T)));
  if (a.is_zero() || M == 0) {
    OrbitVerdict v;
    v.constant = M;
    return v;
  }
  return check_orbit_criterion(a, b, M);
}

Report corollary1_roundtrip(const FiniteSequence& a, const FiniteSequence& b) {
  Report report;
  const std::optional<Rat> ck = k_orbit_constant(a, b);
  if (!ck) {
    report.push_back({"k_orbit_finite", false, "ratio unbounded (b = 0)"});
    return report;
  }
  report.push_back({"k_orbit_finite", true, "C = " + rat_to_string(*ck)});

  const Rat C = a.is_zero() ? Rat(1) : Rat(2 * *ck);

  ReportEntry chain{"e_chain", true, "E(2t, a) <= 2C E(t/C, b)"};
  if (!a.is_zero()) {
    const std::vector<Rat> tails_a = suffix_sums(rearrange(a).profile());
    const std::vector<Rat> tails_b = suffix_sums(rearrange(b).profile());
    std::vector<Rat> grid = {Rat(0)};
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(tails_a.size()); ++j)
      grid.push_back(Rat(j) / 2);
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(tails_b.size()); ++j)
      grid.push_back(*ck * j);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<Rat> samples;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
      samples.push_back((grid[i] + grid[i + 1]) / 2);
    samples.push_back(grid.back() + 1);
    for (const Rat& t : samples) {
      const Rat lhs = tail_at(tails_a, rat_floor(2 * t) + 1);
      const Rat rhs = 2 * *ck * tail_at(tails_b, rat_floor(t / *ck) + 1);
      if (lhs > rhs) {
        chain.pass = false;
        chain.details = "fails at t = " + rat_to_string(t);
        break;
      }
    }
  }
  report.push_back(std::move(chain));

  const OrbitVerdict crit = check_orbit_criterion(a, b, C);
  report.push_back({"criterion_at_2C", crit.holds,
                    crit.holds ? "holds at " + rat_to_string(C)
                               : "fails at k = " + std::to_string(*crit.witness_k)});
  if (!crit.holds) return report;

  OperatorCertificate cert = build_orbit_operator(a, b, C);
  const Report inner = verify_certificate(cert, a, b);
  std::string why;
  for (const ReportEntry& e : inner) {
    if (!e.pass) why += e.check + ": " + e.details + "; ";
  }
  report.push_back({"certificate", report_passes(inner),
                    why.empty() ? "verified" : why});

  ReportEntry bounds{"certificate_bounds", true, ""};
  if (C > 1) {
    const Rat cap_l1 = Rat(6) * (rat_floor(C) + 1);
    const Rat cap_l0 = Rat(9) * (rat_floor(C) + 1);
    bounds.pass = cert.l1_bound <= cap_l1 && Rat(cert.l0_expansion) <= cap_l0;
    bounds.details = "l1 " + rat_to_string(cert.l1_bound) + " <= " +
                     rat_to_string(cap_l1) + ", l0 " +
                     std::to_string(cert.l0_expansion) + " <= " +
                     rat_to_string(cap_l0);
  } else {
    const Rat cap_l1 = Rat(2) / rat_floor(1 / C);
    bounds.pass = cert.l1_bound <= cap_l1 && cert.l0_expansion <= 3;
    bounds.details = "l1 " + rat_to_string(cert.l1_bound) + " <= " +
                     rat_to_string(cap_l1) + ", l0 " +
                     std::to_string(cert.l0_expansion) + " <= 3";
  }
  report.push_back(std::move(bounds));
  return report;
}

Report selftest(std::uint64_t seed, std::int64_t trials) {
  Report report;

  {
    DominatedPairGenerator gen(seed, 40, 200);
    bool pass = true;
    std::string details;
    for (std::int64_t trial = 0; trial < trials && pass; ++trial) {
      const auto [a, b] = gen.next();
      const OperatorCertificate cert =
          build_prop2_operator(rearrange(a), rearrange(b));
      if (!report_passes(verify_certificate(cert, a, b)) ||
          cert.l1_bound > 2 || cert.l0_expansion > 3) {
        pass = false;
        details = "trial " + std::to_string(trial);
      }
    }
    report.push_back({"profile_certificates", pass,
                      pass ? std::to_string(trials) + " trials" : details});
  }

  {
    Rng rng(seed ^ 0xE1ull);
    bool pass = true;
    std::string details;
    for (std::int64_t trial = 0; trial < trials && pass; ++trial) {
      const FiniteSequence x = random_sequence(rng, 10, 30, true);
      const BruteFunctionalTable table(x);
      for (int rep = 0; rep < 8 && pass; ++rep) {
        const Rat t = rng.rat(12, 8);
        if (k_eval(x, t) != table.k_value(t) ||
            e_functional(x, t) != table.e_value(t) ||
            e_star(x, t) != e_star_by_minorant(x, t)) {
          pass = false;
          details = "trial " + std::to_string(trial) + " at t = " +
                    rat_to_string(t);
        }
      }
    }
    report.push_back({"functional_oracles", pass,
                      pass ? std::to_string(trials) + " trials" : details});
  }

  {
    Rng rng(seed ^ 0xF2ull);
    bool pass = true;
    std::string details;
    for (std::int64_t trial = 0; trial < trials && pass; ++trial) {
      const SparseOperator T = random_sparse_operator(rng, 20, 40);
      const FiniteSequence b = random_sequence(rng, T.n_in(), 40, true);
      const OrbitVerdict v = prop1_check(T, b);
      if (!v.holds) {
        pass = false;
        details = "trial " + std::to_string(trial) + " fails at k = " +
                  std::to_string(*v.witness_k);
      }
    }
    report.push_back({"necessity_sweep", pass,
                      pass ? std::to_string(trials) + " trials" : details});
  }

  {
    DominatedPairGenerator gen(seed ^ 0xA3ull, 20, 60);
    Rng rng(seed ^ 0xB4ull);
    bool pass = true;
    std::string details;
    for (std::int64_t trial = 0; trial < trials && pass; ++trial) {
      const auto [a, b] = gen.next();
      OperatorCertificate cert = build_prop2_operator(rearrange(a), rearrange(b));
      if (cert.op.entry_count() == 0) continue;
      auto rows = cert.op.rows();
      std::int64_t target = rng.below(cert.op.entry_count());
      for (auto& row : rows) {
        if (target < static_cast<std::int64_t>(row.size())) {
          row[static_cast<std::size_t>(target)].coeff *= make_rat(3, 2);
          break;
        }
        target -= static_cast<std::int64_t>(row.size());
      }
      cert.op = SparseOperator::from_rows(cert.op.n_in(), cert.op.n_out(),
                                          std::move(rows));
      if (report_passes(verify_certificate(cert, a, b))) {
        pass = false;
        details = "corruption not detected in trial " + std::to_string(trial);
      }
    }
    report.push_back({"fault_detection", pass,
                      pass ? std::to_string(trials) + " trials" : details});
  }

  {
    DominatedPairGenerator gen(seed ^ 0xC5ull, 16, 40);
    bool pass = true;
    std::string details;
    const std::int64_t rounds = std::max<std::int64_t>(1, trials / 10);
    for (std::int64_t trial = 0; trial < rounds && pass; ++trial) {
      const auto [a, b] = gen.next();
      if (b.is_zero()) continue;
      if (!report_passes(corollary1_roundtrip(a, b))) {
        pass = false;
        details = "trial " + std::to_string(trial);
      }
    }
    report.push_back({"k_ratio_roundtrip", pass,
                      pass ? std::to_string(rounds) + " trials" : details});
  }

  return report;
}

}  // namespace orbit
