#include "qaut/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qaut {

namespace {

struct LiveRule {
    Word lhs;
    NCPoly rhs;
    bool alive = true;
};

NCPoly rule_poly(const LiveRule& r) {
    return NCPoly::monomial(Rational(1), r.lhs) - r.rhs;
}

bool contains_subword(const Word& w, const Word& sub) {
    if (sub.size() > w.size())
        return false;
    for (std::size_t pos = 0; pos + sub.size() <= w.size(); ++pos)
        if (std::equal(sub.begin(), sub.end(), w.begin() + pos))
            return true;
    return false;
}

struct Match {
    std::size_t term;  // index into p.terms()
    std::size_t pos;
    std::size_t rule;
};

// Deglex-largest reducible word (terms are stored descending), leftmost
// position, first matching rule.
bool find_match(const NCPoly& p, const std::vector<LiveRule>& rules, Match& out) {
    const auto& terms = p.terms();
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const Word& w = terms[t].first;
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            for (std::size_t r = 0; r < rules.size(); ++r) {
                if (!rules[r].alive)
                    continue;
                const Word& lhs = rules[r].lhs;
                if (lhs.empty() || lhs.size() > w.size() - pos)
                    continue;
                if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
                    out = {t, pos, r};
                    return true;
                }
            }
    }
    return false;
}

NCPoly reduce_full(NCPoly p, const std::vector<LiveRule>& rules) {
    Match m;
    while (find_match(p, rules, m)) {
        const Word& w = p.terms()[m.term].first;
        Rational coeff = p.terms()[m.term].second;
        const LiveRule& rule = rules[m.rule];
        Word prefix(w.begin(), w.begin() + m.pos);
        Word suffix(w.begin() + m.pos + rule.lhs.size(), w.end());
        // w = prefix * lhs * suffix  ->  prefix * rhs * suffix
        p.add_term(w, -coeff);
        p = p + rule.rhs.conjugate(prefix, suffix) * coeff;
    }
    return p;
}

struct Completer {
    std::size_t cap;
    bool touched_cap = false;
    std::vector<LiveRule> rules;
    std::deque<NCPoly> pending;

    struct Overlap {
        Word word;
        std::size_t r1, r2;
        std::size_t olen;

        bool operator<(const Overlap& o) const {
            int c = deglex_compare(word, o.word);
            if (c != 0)
                return c < 0;
            return std::tie(r1, r2, olen) < std::tie(o.r1, o.r2, o.olen);
        }
    };
    std::set<Overlap> overlaps;

    // lhs1 = u * s with |s| = olen, lhs2 = s * v; ambiguity word u * s * v.
    void enqueue_overlaps(std::size_t i, std::size_t j) {
        const Word& l1 = rules[i].lhs;
        const Word& l2 = rules[j].lhs;
        // Proper overlaps only: both the prefix of lhs1 and the suffix of
        // lhs2 outside the shared part stay nonempty. Inclusions are handled
        // by inter-reduction.
        std::size_t max_olen = std::min(l1.size(), l2.size());
        for (std::size_t olen = 1; olen < max_olen; ++olen) {
            if (!std::equal(l2.begin(), l2.begin() + olen, l1.end() - olen))
                continue;
            Word w(l1.begin(), l1.end());
            w.insert(w.end(), l2.begin() + olen, l2.end());
            overlaps.insert({std::move(w), i, j, olen});
        }
    }

    void add_rule_from(NCPoly p) {
        p = reduce_full(std::move(p), rules);
        if (p.is_zero())
            return;
        p = p * (1 / p.leading_coeff());
        Word lhs = p.leading_word();
        NCPoly rhs = NCPoly::monomial(Rational(1), lhs) - p;
        if (lhs.size() >= cap)
            touched_cap = true;
        std::size_t idx = rules.size();
        rules.push_back({std::move(lhs), std::move(rhs), true});
        if (rules.size() > 200000)
            throw Error("completion runaway: rule count exceeded safety bound");

        // Keep the live leading words an antichain: any older rule whose lhs
        // contains the new one is reoriented through the queue.
        for (std::size_t i = 0; i < idx; ++i) {
            if (!rules[i].alive)
                continue;
            if (contains_subword(rules[i].lhs, rules[idx].lhs)) {
                rules[i].alive = false;
                pending.push_back(rule_poly(rules[i]));
            }
        }
        // Keep remainders fully reduced.
        for (std::size_t i = 0; i < idx; ++i) {
            if (!rules[i].alive)
                continue;
            bool reducible = false;
            for (const auto& [w, c] : rules[i].rhs.terms())
                if (contains_subword(w, rules[idx].lhs)) {
                    reducible = true;
                    break;
                }
            if (reducible)
                rules[i].rhs = reduce_full(rules[i].rhs, rules);
        }
        for (std::size_t j = 0; j < rules.size(); ++j) {
            if (!rules[j].alive)
                continue;
            enqueue_overlaps(idx, j);
            if (j != idx)
                enqueue_overlaps(j, idx);
        }
    }

    void run() {
        while (!pending.empty() || !overlaps.empty()) {
            if (!pending.empty()) {
                NCPoly p = std::move(pending.front());
                pending.pop_front();
                add_rule_from(std::move(p));
                continue;
            }
            Overlap o = *overlaps.begin();
            overlaps.erase(overlaps.begin());
            if (!rules[o.r1].alive || !rules[o.r2].alive)
                continue;
            if (o.word.size() > cap) {
                touched_cap = true;
                continue;
            }
            if (o.word.size() >= cap)
                touched_cap = true;
            const LiveRule& r1 = rules[o.r1];
            const LiveRule& r2 = rules[o.r2];
            Word u(r1.lhs.begin(), r1.lhs.end() - o.olen);
            Word v(r2.lhs.begin() + o.olen, r2.lhs.end());
            NCPoly s = r1.rhs.conjugate({}, v) - r2.rhs.conjugate(u, {});
            s = reduce_full(std::move(s), rules);
            if (!s.is_zero())
                pending.push_back(std::move(s));
        }
    }
};

}  // namespace

RewriteSystem complete(const std::vector<NCPoly>& relations, std::size_t degree_cap) {
    Completer c{degree_cap};
    for (const NCPoly& r : relations) {
        if (r.is_zero())
            throw Error("complete: zero relation");
        c.pending.push_back(r);
    }
    c.run();

    RewriteSystem R;
    R.cap_ = degree_cap;
    R.status_ = c.touched_cap ? CompletionStatus::Capped : CompletionStatus::Complete;
    for (LiveRule& r : c.rules)
        if (r.alive)
            R.rules_.push_back({std::move(r.lhs), std::move(r.rhs)});
    return R;
}

std::size_t default_degree_cap(const std::vector<NCPoly>& relations) {
    std::size_t maxdeg = 1;
    for (const NCPoly& r : relations)
        maxdeg = std::max(maxdeg, r.degree());
    return 2 * maxdeg;
}

NCPoly normal_form(const RewriteSystem& R, const NCPoly& p) {
    if (p.degree() > R.degree_cap())
        throw DegreeCapExceeded("normal_form: polynomial degree " + std::to_string(p.degree()) +
                                " exceeds cap " + std::to_string(R.degree_cap()));
    std::vector<LiveRule> rules;
    rules.reserve(R.rules().size());
    for (const Rule& r : R.rules())
        rules.push_back({r.lhs, r.rhs, true});
    return reduce_full(p, rules);
}

ZeroModResult is_zero_mod(const RewriteSystem& R, const NCPoly& p) {
    ZeroModResult result;
    result.status = R.status();
    if (p.degree() > R.degree_cap()) {
        result.verdict = Verdict::Inconclusive;
        result.witness = p;
        return result;
    }
    result.witness = normal_form(R, p);
    if (result.witness.is_zero())
        result.verdict = Verdict::Zero;
    else if (R.status() == CompletionStatus::Complete)
        result.verdict = Verdict::NonzeroWitness;
    else
        result.verdict = Verdict::Inconclusive;
    return result;
}

ZeroModResult is_zero_mod(const std::vector<NCPoly>& relations, const NCPoly& p,
                          std::size_t degree_cap) {
    return is_zero_mod(complete(relations, degree_cap), p);
}

}  // namespace qaut
