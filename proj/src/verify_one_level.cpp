#include "fpcodes/verify_one_level.hpp"

#include <algorithm>
#include <string>

#include "fpcodes/descendant.hpp"
#include "detail/enumeration.hpp"

namespace fpcodes {

namespace {

void check_budget_structure(const Code& c, unsigned t, const Budget& b) {
    if (t == 0) throw ParameterError("coalition bound t must be at least 1");
    if (c.size() > b.max_words)
        throw CapacityError("code size " + std::to_string(c.size()) + " exceeds budget limit " +
                            std::to_string(b.max_words));
    if (c.length() > b.max_length)
        throw CapacityError("code length " + std::to_string(c.length()) +
                            " exceeds budget limit " + std::to_string(b.max_length));
    if (t > b.max_coalition)
        throw CapacityError("coalition bound " + std::to_string(t) + " exceeds budget limit " +
                            std::to_string(b.max_coalition));
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

// word matches some member of X (given by indices into c) in every coordinate
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

unsigned effective_t(const Code& c, unsigned t) {
    return static_cast<unsigned>(std::min<std::uint64_t>(t, c.size()));
}

// Upper bound on |desc(X)| over subsets of size ≤ t: min(t, q)^length, saturating.
std::uint64_t desc_bound(const Code& c, unsigned t) {
    const std::uint64_t base = std::min<std::uint64_t>(t, c.alphabet().size());
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < c.length(); ++i) bound = detail::sat_mul(bound, base);
    return bound;
}

struct SubsetTable {
    std::vector<std::vector<std::size_t>> rows;
};

SubsetTable build_subsets(std::size_t n, unsigned t) {
    SubsetTable table;
    std::vector<std::size_t> idx;
    const std::uint64_t total = detail::subset_count(n, t);
    table.rows.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t r = 0; r < total; ++r) {
        detail::unrank_subset(n, t, r, idx);
        table.rows.push_back(idx);
    }
    return table;
}

bool disjoint_sorted(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] == b[ib]) return false;
        (a[ia] < b[ib]) ? ++ia : ++ib;
    }
    return true;
}

} // namespace

Verdict check_fp(const Code& c, unsigned t, const VerifyOptions& opts) {
    check_budget_structure(c, t, opts.budget);
    if (c.empty()) return Verdict::pass();
    const unsigned te = effective_t(c, t);
    const std::uint64_t total = detail::subset_count(c.size(), te);
    check_work(total, opts.budget, "frameproof");

    auto hit = detail::scan_first<Witness>(total, opts.jobs, [&](std::uint64_t r) {
        std::vector<std::size_t> idx;
        detail::unrank_subset(c.size(), te, r, idx);
        for (std::size_t z = 0; z < c.size(); ++z) {
            if (std::binary_search(idx.begin(), idx.end(), z)) continue;
            if (in_subset_desc(c, idx, c.word(z))) {
                Witness w;
                w.coalition = gather(c, idx);
                w.offender = c.word(z);
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_sfp(const Code& c, unsigned t, const VerifyOptions& opts) {
    check_budget_structure(c, t, opts.budget);
    if (c.empty()) return Verdict::pass();
    const unsigned te = effective_t(c, t);
    const std::uint64_t total = detail::subset_count(c.size(), te);
    check_work(detail::sat_mul(total, total), opts.budget, "secure-frameproof pair");

    const SubsetTable table = build_subsets(c.size(), te);
    std::vector<SymbolProfile> profiles;
    profiles.reserve(table.rows.size());
    for (const auto& row : table.rows) profiles.push_back(SymbolProfile::of(gather(c, row)));

    auto hit = detail::scan_first<Witness>(total, opts.jobs, [&](std::uint64_t r0) {
        const auto& first = table.rows[static_cast<std::size_t>(r0)];
        for (std::size_t r1 = static_cast<std::size_t>(r0) + 1; r1 < table.rows.size(); ++r1) {
            const auto& second = table.rows[r1];
            if (!disjoint_sorted(first, second)) continue;
            const auto shared =
                profiles[static_cast<std::size_t>(r0)].first_common_word(profiles[r1]);
            if (shared) {
                Witness w;
                w.coalition = gather(c, first);
                w.second_coalition = gather(c, second);
                w.word = *shared;
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_ipp(const Code& c, unsigned t, const VerifyOptions& opts) {
    check_budget_structure(c, t, opts.budget);
    if (c.empty()) return Verdict::pass();
    const unsigned te = effective_t(c, t);
    const std::uint64_t subsets = detail::subset_count(c.size(), te);
    ProductEnumerator candidates = descendant_candidates(c, opts.budget.max_products);
    check_work(detail::sat_mul(candidates.count(), subsets), opts.budget,
               "identifiable-parent candidate x subset");

    const SubsetTable table = build_subsets(c.size(), te);

    auto hit = detail::scan_first<Witness>(candidates.count(), opts.jobs, [&](std::uint64_t k) {
        const Codeword x = candidates.at(k);
        std::vector<std::size_t> running;
        std::vector<const std::vector<std::size_t>*> certificate;
        bool seen_parent = false;
        for (const auto& row : table.rows) {
            if (!in_subset_desc(c, row, x)) continue;
            if (!seen_parent) {
                running = row;
                certificate = {&row};
                seen_parent = true;
                continue;
            }
            std::vector<std::size_t> next;
            std::set_intersection(running.begin(), running.end(), row.begin(), row.end(),
                                  std::back_inserter(next));
            if (next.size() == running.size()) continue; // no shrink, skip for a minimal chain
            running = std::move(next);
            certificate.push_back(&row);
            if (running.empty()) {
                Witness w;
                w.word = x;
                for (const auto* set : certificate) w.parent_sets.push_back(gather(c, *set));
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_ta(const Code& c, unsigned t, const VerifyOptions& opts) {
    check_budget_structure(c, t, opts.budget);
    if (c.empty()) return Verdict::pass();
    const unsigned te = effective_t(c, t);
    const std::uint64_t subsets = detail::subset_count(c.size(), te);
    check_work(detail::sat_mul(subsets, desc_bound(c, te)), opts.budget,
               "traceability subset x descendant");

    auto hit = detail::scan_first<Witness>(subsets, opts.jobs, [&](std::uint64_t r) {
        std::vector<std::size_t> idx;
        detail::unrank_subset(c.size(), te, r, idx);
        ProductEnumerator walk(SymbolProfile::of(gather(c, idx)), opts.budget.max_products);
        Codeword x;
        std::vector<std::size_t> dist(c.size());
        for (std::uint64_t k = 0; k < walk.count(); ++k) {
            walk.word_at(k, x);
            std::size_t best = c.length() + 1;
            for (std::size_t j = 0; j < c.size(); ++j) {
                dist[j] = hamming_distance(c.word(j), x);
                best = std::min(best, dist[j]);
            }
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (dist[j] != best) continue;
                if (std::binary_search(idx.begin(), idx.end(), j)) continue;
                Witness w;
                w.coalition = gather(c, idx);
                w.word = x;
                w.offender = c.word(j);
                return std::optional<Witness>(std::move(w));
            }
        }
        return std::optional<Witness>();
    });
    return hit ? Verdict::fail(std::move(hit->second)) : Verdict::pass();
}

Verdict check_property(Property p, const Code& c, unsigned t, const VerifyOptions& opts) {
    switch (p) {
    case Property::fp: return check_fp(c, t, opts);
    case Property::sfp: return check_sfp(c, t, opts);
    case Property::ipp: return check_ipp(c, t, opts);
    case Property::ta: return check_ta(c, t, opts);
    }
    throw ParameterError("unknown property");
}

std::string_view property_name(Property p) {
    switch (p) {
    case Property::fp: return "fp";
    case Property::sfp: return "sfp";
    case Property::ipp: return "ipp";
    case Property::ta: return "ta";
    }
    return "unknown";
}

std::optional<Property> property_from_name(std::string_view name) {
    if (name == "fp") return Property::fp;
    if (name == "sfp") return Property::sfp;
    if (name == "ipp") return Property::ipp;
    if (name == "ta") return Property::ta;
    return std::nullopt;
}

} // namespace fpcodes
