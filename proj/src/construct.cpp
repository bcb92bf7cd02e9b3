#include "fpcodes/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace fpcodes {

SymbolRemap::SymbolRemap(std::vector<Symbol> pi) : pi_(std::move(pi)) {
    if (pi_.empty()) throw ParameterError("remap table must not be empty");
    for (Symbol s : pi_)
        if (s >= pi_.size())
            throw ParameterError("remap target " + std::to_string(s) + " is outside the alphabet");
}

SymbolRemap SymbolRemap::identity(std::size_t alphabet_size) {
    std::vector<Symbol> table(alphabet_size);
    std::iota(table.begin(), table.end(), Symbol{0});
    return SymbolRemap(std::move(table));
}

Symbol SymbolRemap::pi(Symbol a) const {
    if (a >= pi_.size())
        throw ParameterError("symbol " + std::to_string(a) + " is outside the remap alphabet");
    return pi_[a];
}

Codeword apply_psi(const SymbolRemap& remap, const Codeword& x) {
    if (x.empty()) return x;
    Codeword out = x;
    out[0] = remap.pi(out[0]);
    return out;
}

InfeasibleError::InfeasibleError(const std::string& what, ConstructionReport partial)
    : std::runtime_error(what), partial_(std::move(partial)) {}

namespace {

struct Builder {
    const Code& c;
    unsigned g;
    bool random;
    std::mt19937_64 rng;

    std::size_t p = 0;
    std::vector<std::vector<Codeword>> class_words; // indexed by symbol, each sorted
    ConstructionReport rep;
    std::vector<Symbol> pi;
    std::vector<std::vector<Codeword>> groups; // final members, construction order

    Builder(const Code& code, unsigned groups_wanted, const ConstructOptions& opts)
        : c(code), g(groups_wanted), random(opts.mode == PickMode::seeded), rng(opts.seed) {}

    Construction run() {
        const std::size_t q = c.alphabet().size();
        rep.input_size = c.size();
        rep.groups = g;
        if (g < 2) throw ParameterError("group count g must be at least 2");
        if (g > q)
            throw ParameterError("group count g = " + std::to_string(g) +
                                 " exceeds alphabet size q = " + std::to_string(q));
        if (c.empty())
            throw InfeasibleError("cannot form " + std::to_string(g) +
                                      " non-empty groups from an empty code",
                                  rep);

        p = (c.size() + 2 * std::size_t{g} - 1) / (2 * std::size_t{g});
        rep.group_size = p;
        // g·p can exceed |C| only on inputs that are about to fail; keep the
        // partial report sane in that case
        rep.eliminated = c.size() > std::size_t{g} * p ? c.size() - std::size_t{g} * p : 0;
        pi.resize(q);
        std::iota(pi.begin(), pi.end(), Symbol{0});

        classify();
        const std::size_t v = split();
        if (v >= g) {
            relabel_shortcut();
        } else {
            extend_q2(v);
            amalgamate(v);
            relabel_and_truncate(v);
        }

        std::sort(rep.sources.begin(), rep.sources.end());
        TwoLevelCode code = TwoLevelCode::from_groups(c.alphabet(), c.length(), groups);
        return Construction{std::move(code), SymbolRemap(std::move(pi)), std::move(rep)};
    }

    void classify() {
        class_words.resize(c.alphabet().size());
        for (const auto& w : c.words()) class_words[w[0]].push_back(w);
        for (std::size_t a = 0; a < class_words.size(); ++a) {
            if (class_words[a].empty()) continue;
            ClassStat st;
            st.symbol = static_cast<Symbol>(a);
            st.size = class_words[a].size();
            st.alpha = st.size / p;
            st.beta = st.size % p;
            rep.classes.push_back(st);
        }
    }

    // Cuts alpha_a sets of p words out of every class that is large enough.
    std::size_t split() {
        std::size_t v = 0;
        for (const auto& st : rep.classes) {
            if (st.alpha == 0) continue;
            rep.q1.push_back(st.symbol);
            v += st.alpha;
            std::vector<Codeword> pool = class_words[st.symbol];
            if (random) std::shuffle(pool.begin(), pool.end(), rng);
            for (std::size_t k = 0; k < st.alpha; ++k) {
                SplitSet s;
                s.source = st.symbol;
                s.members.assign(pool.begin() + static_cast<std::ptrdiff_t>(k * p),
                                 pool.begin() + static_cast<std::ptrdiff_t>((k + 1) * p));
                std::sort(s.members.begin(), s.members.end());
                rep.split_sets.push_back(std::move(s));
            }
        }
        rep.v = v;
        return v;
    }

    std::vector<Symbol> assignment(std::vector<Symbol> symbols) {
        if (random) std::shuffle(symbols.begin(), symbols.end(), rng);
        return symbols;
    }

    void emit_relabelled(const SplitSet& s, Symbol target) {
        pi[target] = s.source;
        std::vector<Codeword> grp;
        grp.reserve(s.members.size());
        for (const auto& w : s.members) {
            Codeword nw = w;
            nw[0] = target;
            rep.sources.emplace_back(nw, w);
            grp.push_back(std::move(nw));
        }
        std::sort(grp.begin(), grp.end());
        groups.push_back(std::move(grp));
    }

    // v >= g: the first g split sets become the groups under the g smallest symbols.
    void relabel_shortcut() {
        rep.q2.resize(g);
        std::iota(rep.q2.begin(), rep.q2.end(), Symbol{0});
        const std::vector<Symbol> assign = assignment(rep.q2);
        for (unsigned i = 0; i < g; ++i) emit_relabelled(rep.split_sets[i], assign[i]);
    }

    // Grows Q1 to Q2 by discarding the extra classes whose symbols the split
    // sets will reuse.
    void extend_q2(std::size_t v) {
        rep.q2 = rep.q1;
        const std::size_t need = v - rep.q1.size();
        if (need > 0) {
            std::vector<ClassStat> cand;
            for (const auto& st : rep.classes)
                if (st.alpha == 0) cand.push_back(st);
            if (cand.size() < need)
                throw InfeasibleError("cannot extend Q2: need " + std::to_string(need) +
                                          " extra classes but only " + std::to_string(cand.size()) +
                                          " remain",
                                      rep);
            if (random) {
                std::shuffle(cand.begin(), cand.end(), rng);
            } else {
                std::sort(cand.begin(), cand.end(), [](const ClassStat& a, const ClassStat& b) {
                    return a.size != b.size ? a.size < b.size : a.symbol < b.symbol;
                });
            }
            for (std::size_t i = 0; i < need; ++i) {
                rep.q2.push_back(cand[i].symbol);
                rep.discarded_classes.push_back(cand[i].symbol);
            }
        }
        std::sort(rep.q2.begin(), rep.q2.end());
        std::sort(rep.discarded_classes.begin(), rep.discarded_classes.end());
    }

    void amalgamate(std::size_t v) {
        std::vector<ClassStat> pool;
        for (const auto& st : rep.classes) {
            if (st.alpha != 0) continue;
            if (std::binary_search(rep.discarded_classes.begin(), rep.discarded_classes.end(),
                                   st.symbol))
                continue;
            pool.push_back(st);
        }
        if (random) {
            std::shuffle(pool.begin(), pool.end(), rng);
        } else {
            std::sort(pool.begin(), pool.end(), [](const ClassStat& a, const ClassStat& b) {
                return a.size != b.size ? a.size > b.size : a.symbol < b.symbol;
            });
        }

        std::size_t next = 0;
        for (std::size_t k = v; k < g; ++k) {
            AmalgamSet am;
            while (am.members.size() < p) {
                if (next == pool.size())
                    throw InfeasibleError(
                        "ran out of classes while amalgamating set " + std::to_string(k - v + 1) +
                            " of " + std::to_string(g - v),
                        rep);
                am.sources.push_back(pool[next].symbol);
                const auto& cls = class_words[pool[next].symbol];
                am.members.insert(am.members.end(), cls.begin(), cls.end());
                ++next;
            }
            std::sort(am.members.begin(), am.members.end());
            rep.amalgams.push_back(std::move(am));
        }
        for (; next < pool.size(); ++next) rep.unused_classes.push_back(pool[next].symbol);
        std::sort(rep.unused_classes.begin(), rep.unused_classes.end());
    }

    void relabel_and_truncate(std::size_t v) {
        const std::vector<Symbol> assign = assignment(rep.q2);
        for (std::size_t i = 0; i < v; ++i) emit_relabelled(rep.split_sets[i], assign[i]);
        for (const auto& am : rep.amalgams) {
            std::vector<Codeword> survivors;
            if (random) {
                std::vector<std::size_t> idx(am.members.size());
                std::iota(idx.begin(), idx.end(), std::size_t{0});
                std::shuffle(idx.begin(), idx.end(), rng);
                idx.resize(p);
                std::sort(idx.begin(), idx.end());
                for (std::size_t i : idx) survivors.push_back(am.members[i]);
            } else {
                survivors.assign(am.members.begin(),
                                 am.members.begin() + static_cast<std::ptrdiff_t>(p));
            }
            for (const auto& w : survivors) rep.sources.emplace_back(w, w);
            groups.push_back(std::move(survivors));
        }
    }
};

} // namespace

Construction construct_two_level(const Code& c, unsigned g, const ConstructOptions& opts) {
    Builder b(c, g, opts);
    return b.run();
}

bool check_lemma_containment(const SymbolRemap& remap, const std::vector<Codeword>& parents,
                             std::uint64_t ceiling) {
    std::vector<Codeword> mapped;
    mapped.reserve(parents.size());
    for (const auto& x : parents) mapped.push_back(apply_psi(remap, x));
    const SymbolProfile image = SymbolProfile::of(mapped);

    ProductEnumerator walk(SymbolProfile::of(parents), ceiling);
    Codeword d;
    for (std::uint64_t k = 0; k < walk.count(); ++k) {
        walk.word_at(k, d);
        if (d.empty()) return true;
        d[0] = remap.pi(d[0]);
        if (!image.contains(d)) return false;
    }
    return true;
}

} // namespace fpcodes
