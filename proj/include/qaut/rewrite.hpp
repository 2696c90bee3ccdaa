// Bounded overlap completion (noncommutative Buchberger / Knuth-Bendix) for
// two-sided ideals of the free algebra, and normal-form reduction modulo the
// resulting oriented rule set.
//
// Soundness contract: a Zero verdict is always a genuine ideal-membership
// certificate. A nonzero normal form certifies non-membership only when the
// completion finished without touching the degree cap.

#pragma once

#include <cstddef>
#include <vector>

#include "qaut/ncpoly.hpp"

namespace qaut {

struct DegreeCapExceeded : Error {
    using Error::Error;
};

// Oriented rule lhs -> rhs with lhs monic and every word of rhs strictly
// below lhs in deglex.
struct Rule {
    Word lhs;
    NCPoly rhs;
};

enum class CompletionStatus { Complete, Capped };

class RewriteSystem {
public:
    RewriteSystem() = default;

    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t degree_cap() const { return cap_; }
    CompletionStatus status() const { return status_; }

private:
    friend RewriteSystem complete(const std::vector<NCPoly>&, std::size_t);
    std::vector<Rule> rules_;
    std::size_t cap_ = 0;
    CompletionStatus status_ = CompletionStatus::Complete;
};

// Resolves all overlap ambiguities among rule leading words up to the degree
// cap, keeping the rule set inter-reduced. Deterministic: overlaps are
// processed in ascending deglex order of the ambiguity word. Status is
// Complete only when no rule or ambiguity word reached the cap, so that the
// final system is confluent outright.
// Throws Error on a zero input relation.
RewriteSystem complete(const std::vector<NCPoly>& relations, std::size_t degree_cap);

// 2 * max relation degree (at least 2).
std::size_t default_degree_cap(const std::vector<NCPoly>& relations);

// Reduces p until no rule applies. Deterministic: always rewrites the
// deglex-largest reducible word, at its leftmost match, by the first
// matching rule. Rewriting never increases degree, but the input itself
// must fit under the cap; otherwise DegreeCapExceeded is thrown.
NCPoly normal_form(const RewriteSystem& R, const NCPoly& p);

enum class Verdict { Zero, NonzeroWitness, Inconclusive };

struct ZeroModResult {
    Verdict verdict = Verdict::Inconclusive;
    NCPoly witness;  // the normal form (zero when verdict == Zero)
    CompletionStatus status = CompletionStatus::Capped;
};

ZeroModResult is_zero_mod(const std::vector<NCPoly>& relations, const NCPoly& p,
                          std::size_t degree_cap);
// Same, against an already-completed system.
ZeroModResult is_zero_mod(const RewriteSystem& R, const NCPoly& p);

}  // namespace qaut
