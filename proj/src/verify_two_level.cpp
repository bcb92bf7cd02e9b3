#include "fpcodes/verify_two_level.hpp"

#include <algorithm>
#include <string>

#include "fpcodes/descendant.hpp"
#include "detail/enumeration.hpp"

namespace fpcodes {

namespace {

void check_two_level_params(const TwoLevelCode& c, unsigned T, unsigned t, const Budget& b) {
    if (t == 0) throw ParameterError("coalition bound t must be at least 1");
    if (T < t)
        throw ParameterError("group coalition bound T = " + std::to_string(T) +
                             " must be at least t = " + std::to_string(t));
    if (T > b.max_coalition)
        throw CapacityError("coalition bound " + std::to_string(T) + " exceeds budget limit " +
                            std::to_string(b.max_coalition));
    (void)c;
}

void check_work(std::uint64_t work, const Budget& b, const char* what) {
    if (work > b.max_work)
        throw CapacityError(std::string(what) + " enumeration size " +
                            (work == detail::kSaturated ? std::string("overflows")
                                                        : std::to_string(work)) +
                            " exceeds budget limit " + std::to_string(b.max_work));
}

std::vector<Codeword> gather(const Code& c, const std::vector<std::size_t>& idx) {
    std::vector<Codeword> words;
    words.reserve(idx.size());
    for (std::size_t i : idx) words.push_back(c.word(i));
    return words;
}

bool in_subset_desc(const Code& c, const std::vector<std::size_t>& idx, const Codeword& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        bool matched = false;
        for (std::size_t j : idx) {
            if (c.word(j)[i] == word[i]) { matched = true; break; }
        }
        if (!matched) return false;
    }
    return true;
}

std::vector<unsigned> groups_of(const TwoLevelCode& c, const std::vector<std::size_t>& idx) {
    std::vector<unsigned> groups;
    groups.reserve(idx.size());
    for (std::size_t i : idx) groups.push_back(c.group_of(i));
    std::sort(groups.begin(), groups.end());
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    return groups;
}

std::uint64_t desc_bound(const Code& c, unsigned t) {
    const std::uint64_t base = std::min<std::uint64_t>(t, c.alphabet().size());
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < c.length(); ++i) bound = detail::sat_mul(bound, base);
    return bound;
}

struct SubsetTable {
    std::vector<std::vector<std::size_t>> rows;
    std::vector<std::vector<unsigned>> groups;
};

SubsetTable build_subsets(const TwoLevelCode& c, unsigned T) {
    SubsetTable table;
    std::vector<std::size_t> idx;
    const std::uint64_t total = detail::subset_count(c.base().size(), T);
    table.rows.reserve(static_cast<std::size_t>(total));
    table.groups.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t r = 0; r < total; ++r) {
        detail::unrank_subset(c.base().size(), T, r, idx);
        table.groups.push_back(groups_of(c, idx));
        table.rows.push_back(idx);
    }
    return table;
}

bool disjoint_sorted(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] == b[ib]) return false;
        (a[ia] < b[ib]) ? ++ia : ++ib;
    }
    return true;
}

unsigned effective_T(const TwoLevelCode& c, unsigned T) {
    return static_cast<unsigned>(std::min<std::uint64_t>(T, c.base().size()));
}

} // namespace

Verdict check_fp(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts) {
    check_two_level_params(c, T, t, opts.budget);
    Verdict base = check_fp(c.base(), t, opts);
    if (!base) return base;

    const Code& code = c.base();
    const unsigned Te = effective_T(c, T);
    const std::uint64_t total = detail::subset_count(code.size(), Te);
    check_work(total, opts.budget, "group frameproof");

    auto hit = detail::scan_first<Witness>(total, opts.jobs, [&](std::uint64_t r) {
        std::vector<std::size_t> idx;
        detail::unrank_subset(code.size(), Te, r, idx);
        const std::vector<unsigned> xg = groups_of(c, idx);
        for (std::size_t z = 0; z < code.size(); ++z) {
            if (std::binary_search(xg.begin(), xg.end(), c.group_of(z))) continue;
            if (in_subset_desc(code, idx, code.word(z))) {
                Witness w;
                w.clause = Clause::group;
                w.coalition = gather(code, idx);
                w.offender = code.word(z);
                w.coalition_groups = xg;
                w.offender_group = c.group_of(z);
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_sfp(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts) {
    check_two_level_params(c, T, t, opts.budget);
    Verdict base = check_sfp(c.base(), t, opts);
    if (!base) return base;

    const Code& code = c.base();
    const unsigned Te = effective_T(c, T);
    const std::uint64_t total = detail::subset_count(code.size(), Te);
    check_work(detail::sat_mul(total, total), opts.budget, "group secure-frameproof pair");

    const SubsetTable table = build_subsets(c, Te);
    std::vector<SymbolProfile> profiles;
    profiles.reserve(table.rows.size());
    for (const auto& row : table.rows) profiles.push_back(SymbolProfile::of(gather(code, row)));

    auto hit = detail::scan_first<Witness>(total, opts.jobs, [&](std::uint64_t r0) {
        const auto i0 = static_cast<std::size_t>(r0);
        for (std::size_t r1 = i0 + 1; r1 < table.rows.size(); ++r1) {
            if (!disjoint_sorted(table.groups[i0], table.groups[r1])) continue;
            const auto shared = profiles[i0].first_common_word(profiles[r1]);
            if (shared) {
                Witness w;
                w.clause = Clause::group;
                w.coalition = gather(code, table.rows[i0]);
                w.second_coalition = gather(code, table.rows[r1]);
                w.word = *shared;
                w.coalition_groups = table.groups[i0];
                w.second_coalition_groups = table.groups[r1];
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_ipp(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts) {
    check_two_level_params(c, T, t, opts.budget);
    Verdict base = check_ipp(c.base(), t, opts);
    if (!base) return base;

    const Code& code = c.base();
    const unsigned Te = effective_T(c, T);
    const std::uint64_t subsets = detail::subset_count(code.size(), Te);
    ProductEnumerator candidates = descendant_candidates(code, opts.budget.max_products);
    check_work(detail::sat_mul(candidates.count(), subsets), opts.budget,
               "group identifiable-parent candidate x subset");

    const SubsetTable table = build_subsets(c, Te);

    auto hit = detail::scan_first<Witness>(candidates.count(), opts.jobs, [&](std::uint64_t k) {
        const Codeword x = candidates.at(k);
        std::vector<unsigned> running;
        std::vector<std::size_t> certificate;
        bool seen_parent = false;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            if (!in_subset_desc(code, table.rows[r], x)) continue;
            if (!seen_parent) {
                running = table.groups[r];
                certificate = {r};
                seen_parent = true;
                continue;
            }
            std::vector<unsigned> next;
            std::set_intersection(running.begin(), running.end(), table.groups[r].begin(),
                                  table.groups[r].end(), std::back_inserter(next));
            if (next.size() == running.size()) continue;
            running = std::move(next);
            certificate.push_back(r);
            if (running.empty()) {
                Witness w;
                w.clause = Clause::group;
                w.word = x;
                for (std::size_t set : certificate)
                    w.parent_sets.push_back(gather(code, table.rows[set]));
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_ta(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts) {
    check_two_level_params(c, T, t, opts.budget);
    Verdict base = check_ta(c.base(), t, opts);
    if (!base) return base;

    const Code& code = c.base();
    const unsigned Te = effective_T(c, T);
    const std::uint64_t subsets = detail::subset_count(code.size(), Te);
    check_work(detail::sat_mul(subsets, desc_bound(code, Te)), opts.budget,
               "group traceability subset x descendant");

    auto hit = detail::scan_first<Witness>(subsets, opts.jobs, [&](std::uint64_t r) {
        std::vector<std::size_t> idx;
        detail::unrank_subset(code.size(), Te, r, idx);
        const std::vector<unsigned> xg = groups_of(c, idx);
        ProductEnumerator walk(SymbolProfile::of(gather(code, idx)), opts.budget.max_products);
        Codeword x;
        std::vector<std::size_t> dist(code.size());
        for (std::uint64_t k = 0; k < walk.count(); ++k) {
            walk.word_at(k, x);
            std::size_t best = code.length() + 1;
            for (std::size_t j = 0; j < code.size(); ++j) {
                dist[j] = hamming_distance(code.word(j), x);
                best = std::min(best, dist[j]);
            }
            for (std::size_t j = 0; j < code.size(); ++j) {
                if (dist[j] != best) continue;
                if (std::binary_search(xg.begin(), xg.end(), c.group_of(j))) continue;
                Witness w;
                w.clause = Clause::group;
                w.coalition = gather(code, idx);
                w.word = x;
                w.offender = code.word(j);
                w.coalition_groups = xg;
                w.offender_group = c.group_of(j);
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_property(Property p, const TwoLevelCode& c, unsigned T, unsigned t,
                       const VerifyOptions& opts) {
    switch (p) {
    case Property::fp: return check_fp(c, T, t, opts);
    case Property::sfp: return check_sfp(c, T, t, opts);
    case Property::ipp: return check_ipp(c, T, t, opts);
    case Property::ta: return check_ta(c, T, t, opts);
    }
    throw ParameterError("unknown property");
}

} // namespace fpcodes
