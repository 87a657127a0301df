#pragma once

#include "alc/term.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace alc {

enum class RuleId {
    // Synthetic: canonicalization changed the term (E and F absorbed); the
    // starred form also used 0*s -> 0.
    EF, EFStar,
    // Explicit like-term merging and zero-scalar erasure (explorer only).
    F, EStar,
    // Linearity: application left (sum, scalar, zero), application right,
    // abstraction, cocanon.
    A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12,
    // Linearity of pairs (either side), projections and Y.
    AP1, AP2, AP3, AFst1, AFst2, AFst3, ASnd1, ASnd2, ASnd3, AY1, AY2, AY3,
    // Linearity of the PCF operators in their argument and of if in its
    // condition.
    ASucc1, ASucc2, ASucc3, APred1, APred2, APred3, AIsZero1, AIsZero2, AIsZero3, AIf1, AIf2, AIf3,
    B1, B2, Bproj1, Bproj2, BY, Bpredsucc, Bpred0, Biszero0, BiszeroS, BifTT, BifFF
};

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);
bool is_linearity_rule(RuleId r);
bool is_beta_rule(RuleId r);

// Child indices from the root.
using Position = std::vector<std::size_t>;
std::string position_str(const Position& p);

enum class Congruence { CallByValue, Full };

struct RewriteOptions {
    Mode mode = Mode::Weak;
    // Full also reduces under abstractions and canon.
    Congruence congruence = Congruence::CallByValue;
    // Keep like summands apart: F and the zero-scalar rule become steps.
    bool explicit_f = false;
};

struct Reduct {
    RuleId rule;
    Position pos;
    Term term;
};

// Canonical form under the options (the representation reducts() expects).
Term prepare(const Term& t, const RewriteOptions& opts);

// Every one-step reduct of a prepared term, each prepared.
std::vector<Reduct> reducts(const Term& t, const RewriteOptions& opts);

// Deterministic leftmost-innermost step on a prepared term. The result is
// canonical without the zero-scalar rule; normalize() adds that step.
std::optional<Reduct> step(const Term& t, const RewriteOptions& opts);

enum class TraceStatus { Normal, FuelExhausted };

struct Trace {
    Term initial = Term::star();
    std::vector<Reduct> steps;
    TraceStatus status = TraceStatus::Normal;

    const Term& result() const { return steps.empty() ? initial : steps.back().term; }
    bool normal() const { return status == TraceStatus::Normal; }
    // "k. [Rule @ pos] term" lines, starting with "0. term".
    std::string str() const;
};

// Iterate step() until normal or fuel steps are spent.
Trace normalize(const Term& t, const RewriteOptions& opts, std::size_t fuel);

// Shortest reduct path from t to a term alpha-equal to target (after
// preparing both), expanding at most fuel terms.
std::optional<std::vector<Reduct>> find_path(const Term& t, const Term& target, const RewriteOptions& opts,
                                             std::size_t fuel);

// Terms reachable from t, breadth first, at most fuel of them.
TermSet explore(const Term& t, const RewriteOptions& opts, std::size_t fuel);

struct JoinResult {
    bool joined = false;
    std::optional<Term> common;
    std::size_t expanded = 0;
};

// Search for a common reduct: deterministic normal forms first, then a
// breadth-first search from both sides expanding at most fuel terms.
JoinResult join(const Term& a, const Term& b, const RewriteOptions& opts, std::size_t fuel);

}  // namespace alc
