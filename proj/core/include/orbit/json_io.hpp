// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "orbit/construction.hpp"
#include "orbit/marcinkiewicz.hpp"
#include "orbit/verification.hpp"

namespace orbit {

// Wire formats. All numbers travel as canonical "p/q" strings; inputs also
// accept plain integers and finite decimals. Serialization is deterministic:
// identical values produce identical bytes.

// {"values": ["3", "-1/2", "0.25"]}
FiniteSequence sequence_from_json(const std::string& text);
std::string sequence_to_json(const FiniteSequence& x);

// {"n": ..., "profile": [...], "recover": [{"index": ..., "sign": ...}]}
std::string rearrangement_to_json(const SortedProfile& p);

// {"holds": ..., "witness_k": int|null, "constant": "p/q"}
std::string verdict_to_json(const OrbitVerdict& v);

// {"n_in": ..., "n_out": ..., "rows": [{"out": j, "entries": [[i, "p/q"]]}]}
// Rows with no entries are omitted.
SparseOperator operator_from_json(const std::string& text);
std::string operator_to_json(const SparseOperator& T);

// Operator fields plus "l1_bound", "l0_expansion" and "pipeline". Claimed
// bounds are kept verbatim so verification can catch tampering.
OperatorCertificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const OperatorCertificate& cert);

// {"kind": "power", "p": "1/2"} | {"kind": "telescoping-quadratic"} |
// {"kind": "pairwise", "alpha": [...], "beta": [...]}
WeightFamily weight_from_json(const std::string& text);

// [{"check": ..., "pass": ..., "details": ...}, ...]
std::string report_to_json(const Report& report);

std::string envelope_to_json(const PiecewiseLinearConcave& f);

}  // namespace orbit
