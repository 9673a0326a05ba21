// SPDX-License-Identifier: Apache-2.0

#include "orbit/construction.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace orbit {
namespace {

using nlohmann::json;

json partition_to_json(const Partition& part) {
  return json{{"n", part.n}, {"J", part.J}, {"I", part.I}, {"K", part.K}};
}

json plan_to_json(const AllocationPlan& plan) {
  json blocks = json::array();
  for (const AllocationBlock& blk : plan.blocks) {
    blocks.push_back({{"j", blk.j},
                      {"delta", rat_to_string(blk.delta)},
                      {"carried", rat_to_string(blk.carried)},
                      {"consumed", blk.consumed},
                      {"carrier", blk.carrier},
                      {"eta_prime", rat_to_string(blk.eta_prime)},
                      {"spill", rat_to_string(blk.spill)}});
  }
  return json{{"blocks", blocks}, {"unused", plan.unused}};
}

json recover_to_json(const SortedProfile& p) {
  json slots = json::array();
  for (const RecoverSlot& slot : p.recover())
    slots.push_back({{"index", slot.source_index}, {"sign", slot.sign}});
  return json{{"original_length", p.original_length()}, {"slots", slots}};
}

void check_profile_domination(const SortedProfile& a_star,
                              const SortedProfile& b_star) {
  const std::vector<Rat> tails_a = suffix_sums(a_star.profile());
  const std::vector<Rat> tails_b = suffix_sums(b_star.profile());
  for (std::int64_t k = 1; k <= a_star.size(); ++k) {
    Rat tb = k <= b_star.size() ? tails_b[static_cast<std::size_t>(k - 1)] : Rat(0);
    if (tails_a[static_cast<std::size_t>(k - 1)] > tb)
      throw InfeasibleError("tail domination fails at k = " + std::to_string(k));
  }
}

}  // namespace

Partition partition_indices(const SortedProfile& a_star,
                            const SortedProfile& b_star) {
  Partition part;
  part.n = std::max(a_star.size(), b_star.size());
  for (std::int64_t i = 1; i <= part.n; ++i) {
    const Rat a = a_star.entry(i);
    const Rat b = b_star.entry(i);
    if (a > 2 * b) {
      part.J.push_back(i);
    } else if (a < b) {
      part.I.push_back(i);
    } else {
      part.K.push_back(i);
    }
  }
  return part;
}

AllocationPlan allocate_greedy(const SortedProfile& a_star,
                               const SortedProfile& b_star,
                               const Partition& partition) {
  AllocationPlan plan;
  std::size_t pos = 0;  // next donor in partition.I
  std::int64_t prev_carrier = 0;
  Rat prev_spill(0);

  for (const std::int64_t j : partition.J) {
    AllocationBlock blk;
    blk.j = j;
    blk.delta = a_star.entry(j) - b_star.entry(j);
    if (prev_carrier > j) blk.carried = prev_spill;

    Rat need = blk.delta - blk.carried;
    if (need <= 0)
      throw InfeasibleError("deficit already covered by spill at j = " +
                            std::to_string(j));

    // Donors at or before max(j, prev_carrier) are out of reach for this and
    // all later blocks.
    const std::int64_t reach = std::max(j, prev_carrier);
    while (pos < partition.I.size() && partition.I[pos] <= reach)
      plan.unused.push_back(partition.I[pos++]);

    Rat covered(0);
    while (true) {
      if (pos >= partition.I.size())
        throw InfeasibleError("donor mass exhausted at j = " + std::to_string(j));
      const std::int64_t i = partition.I[pos];
      const Rat eta = b_star.entry(i) - a_star.entry(i);
      if (covered + eta < need) {
        blk.consumed.push_back(i);
        covered += eta;
        ++pos;
        continue;
      }
      blk.carrier = i;
      blk.eta_prime = need - covered;
      blk.spill = eta - blk.eta_prime;
      ++pos;
      break;
    }
    prev_carrier = blk.carrier;
    prev_spill = blk.spill;
    plan.blocks.push_back(std::move(blk));
  }

  while (pos < partition.I.size()) plan.unused.push_back(partition.I[pos++]);
  return plan;
}

OperatorCertificate build_prop2_operator(const SortedProfile& a_star,
                                         const SortedProfile& b_star) {
  check_profile_domination(a_star, b_star);
  const Partition part = partition_indices(a_star, b_star);
  const AllocationPlan plan = allocate_greedy(a_star, b_star, part);

  SparseOperator Q(part.n, part.n);

  // Rows outside the deficit class keep the exact ratio on the diagonal, so
  // leftover donor mass never leaks into the image.
  std::vector<bool> in_J(static_cast<std::size_t>(part.n) + 1, false);
  for (std::int64_t j : part.J) in_J[static_cast<std::size_t>(j)] = true;
  for (std::int64_t i = 1; i <= part.n; ++i) {
    if (in_J[static_cast<std::size_t>(i)]) continue;
    const Rat b = b_star.entry(i);
    if (b == 0) continue;  // domination forces a_i = 0 here as well
    Q.add(i, i, a_star.entry(i) / b);
  }

  for (std::size_t k = 0; k < plan.blocks.size(); ++k) {
    const AllocationBlock& blk = plan.blocks[k];
    if (b_star.entry(blk.j) == 0)
      throw std::logic_error("deficit row with zero source");
    Q.add(blk.j, blk.j, Rat(1));
    for (std::int64_t i : blk.consumed) {
      const Rat eta = b_star.entry(i) - a_star.entry(i);
      Q.add(blk.j, i, eta / b_star.entry(i));
    }
    Q.add(blk.j, blk.carrier, blk.eta_prime / b_star.entry(blk.carrier));
    if (blk.carried > 0) {
      const std::int64_t donor = plan.blocks[k - 1].carrier;
      Q.add(blk.j, donor, blk.carried / b_star.entry(donor));
    }
  }

  const FiniteSequence image =
      apply(Q, FiniteSequence(std::vector<Rat>(b_star.profile())));
  if (image != FiniteSequence(std::vector<Rat>(a_star.profile())))
    throw std::logic_error("profile operator does not reproduce target");

  OperatorCertificate cert;
  cert.l1_bound = l1_operator_norm(Q);
  cert.l0_expansion = l0_expansion_bound(Q);
  cert.op = std::move(Q);
  cert.pipeline_json = json{{"kind", "profile"},
                            {"partition", partition_to_json(part)},
                            {"plan", plan_to_json(plan)}}
                           .dump();
  return cert;
}

OperatorCertificate build_orbit_operator(const FiniteSequence& a,
                                         const FiniteSequence& b, const Rat& C) {
  const OrbitVerdict verdict = check_orbit_criterion(a, b, C);
  if (!verdict.holds)
    throw CriterionError("orbit criterion fails at k = " +
                             std::to_string(*verdict.witness_k),
                         *verdict.witness_k);

  const SortedProfile pa = rearrange(a);
  const SortedProfile pb = rearrange(b);

  const bool up = C > 1;
  const std::int64_t m = up ? 3 * (rat_floor(C) + 1) : rat_floor(1 / C);
  SparseOperator sigma = up ? dilation_up_operator(pb.size(), m)
                            : dilation_down_operator(pb.size(), m);

  const FiniteSequence dilated =
      apply(sigma, FiniteSequence(std::vector<Rat>(pb.profile())));
  const SortedProfile ps = rearrange(dilated);

  // The dilation is sized so the dilated profile tail-dominates a*; a
  // failure here means the construction itself is broken.
  const std::vector<Rat> tails_a = suffix_sums(pa.profile());
  const std::vector<Rat> tails_s = suffix_sums(ps.profile());
  for (std::int64_t k = 1; k <= pa.size(); ++k) {
    Rat ts = k <= ps.size() ? tails_s[static_cast<std::size_t>(k - 1)] : Rat(0);
    if (tails_a[static_cast<std::size_t>(k - 1)] > ts)
      throw ConstructionError("dilated profile fails to dominate at k = " +
                              std::to_string(k));
  }

  OperatorCertificate inner = build_prop2_operator(pa, ps);
  const std::int64_t N = inner.op.n_in();

  const SparseOperator stage1 = to_profile_operator(pb);
  const SparseOperator stage2 = padded(sigma, pb.size(), N);
  const SparseOperator stage4 = padded(from_profile_operator(pa), N, a.length());

  SparseOperator T = compose(stage4, compose(inner.op, compose(stage2, stage1)));
  if (apply(T, b) != a)
    throw std::logic_error("orbit operator does not reproduce target");

  OperatorCertificate cert;
  cert.l1_bound = l1_operator_norm(T);
  cert.l0_expansion = l0_expansion_bound(T);
  cert.op = std::move(T);
  cert.pipeline_json =
      json{{"kind", "orbit"},
           {"constant", rat_to_string(C)},
           {"dilation", json{{"direction", up ? "up" : "down"}, {"factor", m}}},
           {"source_map", recover_to_json(pb)},
           {"target_map", recover_to_json(pa)},
           {"profile_stage", json::parse(inner.pipeline_json)}}
          .dump();
  return cert;
}

}  // namespace orbit
