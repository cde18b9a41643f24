#include "sdkit/code_aut.hpp"

#include "sdkit/errors.hpp"
#include "sdkit/permgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sdkit {

namespace {

// signed coordinate point: (i, sign) with sign in {1,2}
inline int spoint(int i, uint8_t sign) { return 2 * i + (sign == 2 ? 1 : 0); }

Perm monomial_to_perm(const Monomial& p) {
    const int n = p.n();
    Perm out(2 * n);
    for (int i = 0; i < n; ++i) {
        out[spoint(i, 1)] = spoint(p.perm[i], p.sign[i]);
        out[spoint(i, 2)] = spoint(p.perm[i], gf3::neg(p.sign[i]));
    }
    return out;
}

constexpr long long kMaxPruneWords = 30000;
constexpr long long kSearchNodeBudget = 30'000'000;
constexpr size_t kMaxSubsetIndex = 4'000'000;

// Pruning/propagation data for one code. The permutation part of a
// monomial map is searched against support structure only; signs are
// recovered afterwards by propagation through word overlaps, so all
// invariants here are folded over sign flips.
struct CodeInvariants {
    int n = 0;
    std::vector<int> class_weights;
    std::vector<gf3::Mat> classes;          // one word per +-pair
    std::vector<std::vector<int>> supports; // per class, per word: sorted coords

    // unsigned count of words through i, per class
    std::vector<std::vector<uint32_t>> through;
    // canonical (sign-folded) 2x2 value table per ordered pair, per class
    std::vector<std::vector<uint64_t>> pair_canon;
    std::vector<uint64_t> coord_key;
    std::vector<long long> support_hist;

    // subset index: all subsets of all support masks (per class, n <= 32)
    std::vector<std::vector<uint32_t>> subset_index; // sorted, unique
    std::vector<char> subset_index_ok;

    // support mask -> word id (classes where supports determine words)
    std::vector<std::unordered_map<uint32_t, int>> mask_to_word;
    std::vector<char> propagating;
    // coord -> (class, word) adjacency over propagating classes
    std::vector<std::vector<std::pair<int, int>>> coord_words;

    std::vector<int> order; // source coordinate processing order
    std::vector<int> comp;  // sign-propagation component per coordinate

    uint64_t pair_at(int c, int i, int j) const {
        return pair_canon[c][size_t(i) * n + j];
    }
};

uint64_t canon_pair_table(uint32_t t11, uint32_t t12, uint32_t t21, uint32_t t22) {
    // fold over independent sign flips of the two coordinates
    auto enc = [](uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
        return (uint64_t(a) << 48) | (uint64_t(b) << 32) | (uint64_t(c) << 16) | d;
    };
    uint64_t v0 = enc(t11, t12, t21, t22);
    uint64_t v1 = enc(t21, t22, t11, t12); // flip first coord sign
    uint64_t v2 = enc(t12, t11, t22, t21); // flip second coord sign
    uint64_t v3 = enc(t22, t21, t12, t11); // flip both
    return std::min(std::min(v0, v1), std::min(v2, v3));
}

CodeInvariants build_invariants(const TernaryCode& code) {
    CodeInvariants inv;
    const int n = code.length();
    inv.n = n;

    WeightDistribution wd = weight_distribution(code);
    // Weight classes from the minimum weight upward until every
    // coordinate is covered and the shared-word coordinate graph is
    // connected (reached for indecomposable codes; decomposable ones
    // stop at the word cap and leave free sign components).
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    std::vector<bool> covered(n, false);
    long long words_total = 0;
    for (int w = 1; w <= n; ++w) {
        if (wd.at(w) == 0) continue;
        if (words_total + wd.at(w) / 2 > kMaxPruneWords && !inv.classes.empty()) break;
        gf3::Mat words = codewords_of_weight(code, w);
        // keep one representative per +- pair (the lexicographically
        // smaller of x, -x survives the sort+dedup below)
        gf3::Mat reps;
        for (auto& x : words) {
            gf3::Vec nx(x.size());
            for (size_t q = 0; q < x.size(); ++q) nx[q] = gf3::neg(x[q]);
            if (x <= nx) reps.push_back(x);
        }
        words_total += int(reps.size());
        for (const auto& x : reps) {
            int first = -1;
            for (int i = 0; i < n; ++i) {
                if (!x[i]) continue;
                covered[i] = true;
                if (first < 0) first = i;
                else parent[find(i)] = find(first);
            }
        }
        inv.class_weights.push_back(w);
        inv.classes.push_back(std::move(reps));
        bool all_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
        bool connected = all_covered;
        if (all_covered)
            for (int i = 1; i < n && connected; ++i) connected = (find(i) == find(0));
        if (connected) break;
    }

    const int nc = int(inv.classes.size());
    inv.supports.resize(nc);
    inv.through.assign(nc, std::vector<uint32_t>(n, 0));
    inv.pair_canon.assign(nc, std::vector<uint64_t>(size_t(n) * n, 0));
    inv.subset_index.resize(nc);
    inv.subset_index_ok.assign(nc, 0);
    inv.mask_to_word.resize(nc);
    inv.propagating.assign(nc, 1);
    inv.coord_words.resize(n);

    std::vector<std::vector<uint32_t>> diag(nc, std::vector<uint32_t>(size_t(n) * 2, 0));
    std::vector<std::vector<uint32_t>> pair_raw(nc, std::vector<uint32_t>(size_t(n) * n * 4, 0));
    for (int c = 0; c < nc; ++c) {
        for (int widx = 0; widx < int(inv.classes[c].size()); ++widx) {
            const auto& x = inv.classes[c][widx];
            std::vector<int> supp;
            for (int i = 0; i < n; ++i)
                if (x[i]) supp.push_back(i);
            for (int i : supp) {
                // count x and -x so the statistics are sign-symmetric
                diag[c][2 * i + (x[i] - 1)]++;
                diag[c][2 * i + (gf3::neg(x[i]) - 1)]++;
                inv.through[c][i] += 2;
            }
            for (int i : supp)
                for (int j : supp)
                    if (i != j) {
                        pair_raw[c][(size_t(i) * n + j) * 4 + (x[i] - 1) * 2 + (x[j] - 1)]++;
                        pair_raw[c][(size_t(i) * n + j) * 4 +
                                    (gf3::neg(x[i]) - 1) * 2 + (gf3::neg(x[j]) - 1)]++;
                    }
            inv.supports[c].insert(inv.supports[c].end(), supp.begin(), supp.end());
            // flattened below; keep per-word slice via weight
        }
    }
    // supports stored flattened per class: word w occupies
    // [w*weight, (w+1)*weight)
    for (int c = 0; c < nc; ++c) {
        const int w = inv.class_weights[c];
        const size_t cnt = inv.classes[c].size();
        if (inv.supports[c].size() != cnt * size_t(w))
            throw Error("internal: ragged support table");
    }

    for (int c = 0; c < nc; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const size_t base = (size_t(i) * n + j) * 4;
                inv.pair_canon[c][size_t(i) * n + j] =
                    canon_pair_table(pair_raw[c][base + 0], pair_raw[c][base + 1],
                                     pair_raw[c][base + 2], pair_raw[c][base + 3]);
            }

    inv.coord_key.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t v) { h = (h ^ v) * 1099511628211ull; };
        for (int c = 0; c < nc; ++c) {
            uint32_t a = diag[c][2 * i], b = diag[c][2 * i + 1];
            mix(std::min(a, b));
            mix(std::max(a, b));
        }
        inv.coord_key[i] = h;
    }

    // masks, subset indices, support->word lookup
    for (int c = 0; c < nc && n <= 32; ++c) {
        const int w = inv.class_weights[c];
        const size_t cnt = inv.classes[c].size();
        std::vector<uint32_t> masks(cnt, 0);
        for (size_t widx = 0; widx < cnt; ++widx)
            for (int q = 0; q < w; ++q)
                masks[widx] |= 1u << inv.supports[c][widx * w + q];
        for (size_t widx = 0; widx < cnt; ++widx) {
            auto [it, fresh] = inv.mask_to_word[c].emplace(masks[widx], int(widx));
            if (!fresh) inv.propagating[c] = 0; // support does not determine the word
        }
        if (size_t(1ull << w) * cnt <= kMaxSubsetIndex) {
            std::vector<uint32_t>& idx = inv.subset_index[c];
            for (size_t widx = 0; widx < cnt; ++widx) {
                uint32_t m = masks[widx];
                // all submasks
                uint32_t s = m;
                while (true) {
                    idx.push_back(s);
                    if (s == 0) break;
                    s = (s - 1) & m;
                }
            }
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            inv.subset_index_ok[c] = 1;
        }
    }
    for (int c = 0; c < nc; ++c) {
        if (!inv.propagating[c]) continue;
        const int w = inv.class_weights[c];
        for (size_t widx = 0; widx < inv.classes[c].size(); ++widx)
            for (int q = 0; q < w; ++q)
                inv.coord_words[inv.supports[c][widx * w + q]].push_back({c, int(widx)});
    }

    // intersection profile of the minimum-weight supports
    if (nc > 0 && n <= 32) {
        std::vector<uint32_t> masks;
        for (const auto& kv : inv.mask_to_word[0]) masks.push_back(kv.first);
        std::sort(masks.begin(), masks.end());
        inv.support_hist.assign(n + 1, 0);
        for (size_t i = 0; i < masks.size(); ++i)
            for (size_t j = i + 1; j < masks.size(); ++j)
                inv.support_hist[__builtin_popcount(masks[i] & masks[j])]++;
    }

    // sign-propagation components (connectivity through propagating words)
    inv.comp.assign(n, -1);
    {
        std::vector<int> stack;
        int cid = 0;
        for (int r = 0; r < n; ++r) {
            if (inv.comp[r] >= 0) continue;
            stack.push_back(r);
            inv.comp[r] = cid;
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (const auto& [c, widx] : inv.coord_words[i]) {
                    const int w = inv.class_weights[c];
                    for (int q = 0; q < w; ++q) {
                        int j = inv.supports[c][size_t(widx) * w + q];
                        if (inv.comp[j] < 0) { inv.comp[j] = cid; stack.push_back(j); }
                    }
                }
            }
            ++cid;
        }
    }

    // processing order: rarest coordinate key first, then greedily the
    // coordinate sharing the most words with those already placed
    std::map<uint64_t, int> key_freq;
    for (int i = 0; i < n; ++i) key_freq[inv.coord_key[i]]++;
    std::vector<bool> placed(n, false);
    int start = 0;
    for (int i = 1; i < n; ++i)
        if (std::pair(key_freq[inv.coord_key[i]], i) < std::pair(key_freq[inv.coord_key[start]], start))
            start = i;
    inv.order.push_back(start);
    placed[start] = true;
    while (int(inv.order.size()) < n) {
        long long best_score = -1;
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (placed[i]) continue;
            long long score = 0;
            for (int c = 0; c < nc; ++c)
                for (int j : inv.order) {
                    const size_t base = (size_t(i) * n + j) * 4;
                    score += pair_raw[c][base] + pair_raw[c][base + 1] +
                             pair_raw[c][base + 2] + pair_raw[c][base + 3];
                }
            if (score > best_score) { best_score = score; best = i; }
        }
        inv.order.push_back(best);
        placed[best] = true;
    }
    return inv;
}

std::string fingerprint_of(const CodeInvariants& inv, const TernaryCode& code) {
    std::ostringstream os;
    os << code.length() << "," << code.dimension() << ";";
    WeightDistribution wd = weight_distribution(code);
    for (auto c : wd.counts) os << c << ",";
    os << ";";
    std::vector<uint64_t> keys = inv.coord_key;
    std::sort(keys.begin(), keys.end());
    for (auto k : keys) os << k << ",";
    os << ";";
    for (auto h : inv.support_hist) os << h << ",";
    return os.str();
}

// Backtrack over the permutation part, signs recovered at the leaves.
struct MonomialSearch {
    const CodeInvariants& src;
    const CodeInvariants& dst;
    const TernaryCode& src_code;
    const TernaryCode& dst_code;
    int n;
    std::vector<int> img;   // source coord -> target coord (-1 unset)
    std::vector<bool> used; // target coord used
    // sign seeds: 0 free, 1/2 forced
    std::vector<uint8_t> seed;
    long long nodes = 0;
    Monomial found; // valid after extend() returns true

    MonomialSearch(const CodeInvariants& s, const CodeInvariants& d,
                   const TernaryCode& sc, const TernaryCode& dc)
        : src(s), dst(d), src_code(sc), dst_code(dc), n(s.n),
          img(s.n, -1), used(s.n, false), seed(s.n, 0) {}

    void reset() {
        std::fill(img.begin(), img.end(), -1);
        std::fill(used.begin(), used.end(), false);
        std::fill(seed.begin(), seed.end(), uint8_t(0));
    }

    bool compatible(int i, int t) const {
        if (src.coord_key[i] != dst.coord_key[t]) return false;
        const int nc = int(src.classes.size());
        for (int c = 0; c < nc; ++c)
            if (src.through[c][i] != dst.through[c][t]) return false;
        for (int c = 0; c < nc; ++c)
            for (int j = 0; j < n; ++j) {
                if (img[j] < 0 || j == i) continue;
                if (src.pair_at(c, i, j) != dst.pair_at(c, t, img[j])) return false;
            }
        // image of every partially-mapped word must stay inside some
        // target support (subset index over the indexed classes)
        for (int c = 0; c < nc; ++c) {
            if (!src.subset_index_ok[c] || !dst.subset_index_ok[c]) continue;
            const int w = src.class_weights[c];
            const auto& suppflat = src.supports[c];
            for (const auto& [cc, widx] : src.coord_words[i]) {
                if (cc != c) continue;
                uint32_t m = 1u << t;
                for (int q = 0; q < w; ++q) {
                    int j = suppflat[size_t(widx) * w + q];
                    if (j != i && img[j] >= 0) m |= 1u << img[j];
                }
                const auto& idx = dst.subset_index[c];
                if (!std::binary_search(idx.begin(), idx.end(), m)) return false;
            }
        }
        return true;
    }

    // Sign recovery: propagate from seeds through words whose support
    // determines their codeword; remaining free components get both
    // flips tried. Returns true and fills `found` on success.
    bool solve_signs() {
        std::vector<uint8_t> sigma(n, 0);
        std::vector<int> queue;
        std::vector<std::vector<char>> word_done(src.classes.size());
        for (size_t c = 0; c < src.classes.size(); ++c)
            word_done[c].assign(src.classes[c].size(), 0);

        auto propagate_from = [&](int root) -> bool {
            queue.clear();
            queue.push_back(root);
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int i = queue[qi];
                for (const auto& [c, widx] : src.coord_words[i]) {
                    if (word_done[c][widx]) continue;
                    word_done[c][widx] = 1;
                    const int w = src.class_weights[c];
                    const auto& x = src.classes[c][widx];
                    uint32_t m = 0;
                    for (int q = 0; q < w; ++q)
                        m |= 1u << img[src.supports[c][size_t(widx) * w + q]];
                    auto it = dst.mask_to_word[c].find(m);
                    if (it == dst.mask_to_word[c].end()) return false;
                    const auto& y = dst.classes[c][it->second];
                    const uint8_t eps =
                        gf3::mul(gf3::mul(sigma[i], x[i]), gf3::inv(y[img[i]]));
                    for (int q = 0; q < w; ++q) {
                        int j = src.supports[c][size_t(widx) * w + q];
                        uint8_t want = gf3::mul(gf3::mul(eps, y[img[j]]), gf3::inv(x[j]));
                        if (sigma[j] == 0) {
                            sigma[j] = want;
                            queue.push_back(j);
                        } else if (sigma[j] != want) {
                            return false;
                        }
                    }
                }
            }
            return true;
        };

        for (int i = 0; i < n; ++i) {
            if (!seed[i]) continue;
            if (sigma[i] == 0) {
                sigma[i] = seed[i];
                if (!propagate_from(i)) return false;
            } else if (sigma[i] != seed[i]) {
                return false;
            }
        }
        // roots of the remaining free components, in coordinate order
        std::vector<int> free_roots;
        for (int i = 0; i < n; ++i) {
            if (sigma[i]) continue;
            sigma[i] = 1;
            if (!propagate_from(i)) return false;
            free_roots.push_back(i);
        }
        const std::vector<int>& comp = src.comp;
        std::vector<int> flip_comps;
        for (int r : free_roots) flip_comps.push_back(comp[r]);
        std::sort(flip_comps.begin(), flip_comps.end());
        flip_comps.erase(std::unique(flip_comps.begin(), flip_comps.end()), flip_comps.end());
        if (flip_comps.size() > 20)
            throw BudgetError("sign component explosion in monomial search");

        Monomial p;
        p.perm.assign(img.begin(), img.end());
        for (uint64_t combo = 0; combo < (1ull << flip_comps.size()); ++combo) {
            p.sign = sigma;
            for (size_t b = 0; b < flip_comps.size(); ++b)
                if (combo & (1ull << b))
                    for (int i = 0; i < n; ++i)
                        if (comp[i] == flip_comps[b]) p.sign[i] = gf3::neg(p.sign[i]);
            bool ok = true;
            for (const auto& row : src_code.genmat())
                if (!dst_code.contains(p.apply(row))) { ok = false; break; }
            if (ok) { found = p; return true; }
        }
        return false;
    }

    bool extend(int level) {
        if (++nodes > kSearchNodeBudget)
            throw BudgetError("monomial search budget exceeded");
        if (level == n) return solve_signs();
        const int i = src.order[level];
        for (int t = 0; t < n; ++t) {
            if (used[t] || !compatible(i, t)) continue;
            img[i] = t;
            used[t] = true;
            if (extend(level + 1)) return true;
            img[i] = -1;
            used[t] = false;
        }
        return false;
    }
};

AutGroupDescription indecomposable_aut(const TernaryCode& code, const CodeInvariants& inv) {
    const int n = code.length();
    std::vector<int> base;
    base.reserve(n);
    for (int l = 0; l < n; ++l) base.push_back(spoint(inv.order[l], 1));
    StabilizerChain chain(2 * n, base);
    std::vector<Monomial> gens;

    // -identity is always an automorphism; seeding it halves the search.
    {
        Monomial minus = Monomial::identity(n);
        std::fill(minus.sign.begin(), minus.sign.end(), uint8_t(2));
        gens.push_back(minus);
        chain.add_generator(monomial_to_perm(minus));
    }

    MonomialSearch search(inv, inv, code, code);
    for (int level = 0; level < n; ++level) {
        const int i = inv.order[level];
        for (int t = 0; t < n; ++t) {
            for (uint8_t s : {uint8_t(1), uint8_t(2)}) {
                if (chain.in_orbit(level, spoint(t, s))) continue;
                search.reset();
                for (int j = 0; j < level; ++j) {
                    int cj = inv.order[j];
                    search.img[cj] = cj;
                    search.used[cj] = true;
                    search.seed[cj] = 1;
                }
                if (search.used[t] || !search.compatible(i, t)) continue;
                search.img[i] = t;
                search.used[t] = true;
                search.seed[i] = s;
                if (search.extend(level + 1)) {
                    gens.push_back(search.found);
                    chain.add_generator(monomial_to_perm(search.found));
                }
            }
        }
    }
    chain.finalize();
    return {std::move(gens), chain.order()};
}

AutGroupDescription decomposable_aut(const TernaryCode& code,
                                     const std::vector<CodeComponent>& comps) {
    const int n = code.length();
    struct Group {
        TernaryCode rep;
        AutGroupDescription aut;
        std::vector<int> members;
        std::vector<Monomial> to_rep; // member code -> rep code
    };
    std::vector<Group> groups;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        bool placed = false;
        for (auto& g : groups) {
            if (g.rep.length() != comps[ci].code.length()) continue;
            if (auto w = are_equivalent(comps[ci].code, g.rep)) {
                g.members.push_back(int(ci));
                g.to_rep.push_back(*w);
                placed = true;
                break;
            }
        }
        if (!placed) {
            Group g;
            g.rep = comps[ci].code;
            g.aut = automorphism_group(comps[ci].code);
            g.members.push_back(int(ci));
            g.to_rep.push_back(Monomial::identity(comps[ci].code.length()));
            groups.push_back(std::move(g));
        }
    }

    mpz_class order = 1;
    std::vector<Monomial> gens;
    auto embed = [&](const Monomial& local, const std::vector<int>& supp) {
        Monomial g = Monomial::identity(n);
        for (size_t a = 0; a < supp.size(); ++a) {
            g.perm[supp[a]] = supp[local.perm[a]];
            g.sign[supp[a]] = local.sign[a];
        }
        return g;
    };
    for (const auto& g : groups) {
        const int m = int(g.members.size());
        mpz_class p = 1;
        for (int t = 0; t < m; ++t) p *= g.aut.order;
        mpz_class fact = 1;
        for (int t = 2; t <= m; ++t) fact *= t;
        order *= p * fact;

        for (const auto& local : g.aut.generators) {
            const auto& supp = comps[g.members[0]].support;
            Monomial on_member = g.to_rep[0].then(local).then(g.to_rep[0].inverse());
            gens.push_back(embed(on_member, supp));
        }
        for (int t = 0; t + 1 < m; ++t) {
            const auto& sa = comps[g.members[t]].support;
            const auto& sb = comps[g.members[t + 1]].support;
            Monomial fwd = g.to_rep[t].then(g.to_rep[t + 1].inverse());
            Monomial bwd = fwd.inverse();
            Monomial swap = Monomial::identity(n);
            for (size_t a = 0; a < sa.size(); ++a) {
                swap.perm[sa[a]] = sb[fwd.perm[a]];
                swap.sign[sa[a]] = fwd.sign[a];
            }
            for (size_t b = 0; b < sb.size(); ++b) {
                swap.perm[sb[b]] = sa[bwd.perm[b]];
                swap.sign[sb[b]] = bwd.sign[b];
            }
            gens.push_back(swap);
        }
    }
    return {std::move(gens), order};
}

std::mutex g_cache_mutex;
std::map<std::string, AutGroupDescription>& aut_cache() {
    static std::map<std::string, AutGroupDescription> cache;
    return cache;
}

} // namespace

AutGroupDescription automorphism_group(const TernaryCode& code) {
    const std::string key = code.canonical_bytes();
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = aut_cache().find(key);
        if (it != aut_cache().end()) return it->second;
    }

    AutGroupDescription result;
    const int n = code.length();
    if (code.dimension() == 0) {
        result.order = 1;
        for (int i = 0; i < n; ++i) result.order *= 2;
        for (int i = 2; i <= n; ++i) result.order *= i;
        Monomial flip = Monomial::identity(n);
        flip.sign[0] = 2;
        result.generators.push_back(flip);
        if (n >= 2) {
            Monomial swap = Monomial::identity(n);
            std::swap(swap.perm[0], swap.perm[1]);
            result.generators.push_back(swap);
            Monomial cyc = Monomial::identity(n);
            for (int i = 0; i < n; ++i) cyc.perm[i] = (i + 1) % n;
            result.generators.push_back(cyc);
        }
    } else {
        auto comps = decompose(code);
        if (comps.size() > 1) {
            result = decomposable_aut(code, comps);
        } else {
            CodeInvariants inv = build_invariants(code);
            result = indecomposable_aut(code, inv);
        }
    }

    std::lock_guard<std::mutex> lock(g_cache_mutex);
    aut_cache().emplace(key, result);
    return result;
}

std::string invariant_fingerprint(const TernaryCode& code) {
    CodeInvariants inv = build_invariants(code);
    return fingerprint_of(inv, code);
}

std::optional<Monomial> are_equivalent(const TernaryCode& c1, const TernaryCode& c2) {
    if (c1.length() != c2.length() || c1.dimension() != c2.dimension())
        return std::nullopt;
    if (c1 == c2) return Monomial::identity(c1.length());
    if (c1.dimension() == 0) return Monomial::identity(c1.length());
    if (decompose(c1).size() != decompose(c2).size()) return std::nullopt;

    CodeInvariants inv1 = build_invariants(c1);
    CodeInvariants inv2 = build_invariants(c2);
    if (fingerprint_of(inv1, c1) != fingerprint_of(inv2, c2)) return std::nullopt;
    if (automorphism_group(c1).order != automorphism_group(c2).order)
        return std::nullopt;

    // First image restricted to Aut(c2)-orbit representatives on signed
    // coordinates; any witness normalizes into one by composing with an
    // automorphism of c2.
    const int n = c1.length();
    std::vector<Perm> perms;
    for (const auto& g : automorphism_group(c2).generators)
        perms.push_back(monomial_to_perm(g));
    std::vector<int> orbit_rep(2 * n, -1);
    for (int p = 0; p < 2 * n; ++p) {
        if (orbit_rep[p] >= 0) continue;
        std::vector<int> stack{p};
        orbit_rep[p] = p;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (const auto& g : perms)
                if (orbit_rep[g[q]] < 0) { orbit_rep[g[q]] = p; stack.push_back(g[q]); }
        }
    }

    MonomialSearch search(inv1, inv2, c1, c2);
    const int i0 = inv1.order[0];
    for (int t = 0; t < n; ++t)
        for (uint8_t s : {uint8_t(1), uint8_t(2)}) {
            if (orbit_rep[spoint(t, s)] != spoint(t, s)) continue;
            search.reset();
            if (!search.compatible(i0, t)) continue;
            search.img[i0] = t;
            search.used[t] = true;
            search.seed[i0] = s;
            if (search.extend(1)) return search.found;
        }
    return std::nullopt;
}

} // namespace sdkit
