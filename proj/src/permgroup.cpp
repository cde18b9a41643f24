#include "sdkit/permgroup.hpp"

#include "sdkit/errors.hpp"

#include <numeric>

namespace sdkit {

Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[a[i]] = i;
    return out;
}

StabilizerChain::StabilizerChain(int degree, std::vector<int> base)
    : degree_(degree), base_(std::move(base)) {
    levels_.resize(base_.size());
    rebuild_orbits_from(0);
}

std::vector<const Perm*> StabilizerChain::gens_at(int level) const {
    // Everything inserted at level >= l fixes base[0..l-1], hence lies in
    // the stabilizer this level's orbit is computed under.
    std::vector<const Perm*> out;
    for (size_t j = level; j < levels_.size(); ++j)
        for (const Perm& g : levels_[j].inserted) out.push_back(&g);
    return out;
}

void StabilizerChain::rebuild_orbits_from(int level) {
    for (int l = level; l < int(levels_.size()); ++l) {
        Level& lv = levels_[l];
        auto gens = gens_at(l);
        lv.orbit.clear();
        lv.where.assign(degree_, -1);
        lv.transversal.clear();
        lv.orbit.push_back(base_[l]);
        lv.where[base_[l]] = 0;
        lv.transversal.push_back(perm_identity(degree_));
        for (size_t i = 0; i < lv.orbit.size(); ++i)
            for (const Perm* g : gens) {
                int img = (*g)[lv.orbit[i]];
                if (lv.where[img] < 0) {
                    lv.where[img] = int(lv.orbit.size());
                    lv.orbit.push_back(img);
                    lv.transversal.push_back(perm_compose(lv.transversal[i], *g));
                }
            }
    }
}

std::pair<int, Perm> StabilizerChain::sift(const Perm& g) const {
    Perm h = g;
    for (size_t l = 0; l < levels_.size(); ++l) {
        int idx = levels_[l].where[h[base_[l]]];
        if (idx < 0) return {int(l), h};
        h = perm_compose(h, perm_inverse(levels_[l].transversal[idx]));
    }
    return {int(levels_.size()), h};
}

void StabilizerChain::add_generator(const Perm& g) {
    if (int(g.size()) != degree_)
        throw ValidationError("generator degree mismatch");
    auto [level, residue] = sift(g);
    if (level >= int(levels_.size())) {
        for (int i = 0; i < degree_; ++i)
            if (residue[i] != i)
                throw Error("stabilizer chain base does not separate the group");
        return;
    }
    external_gens_.push_back(g);
    levels_[level].inserted.push_back(residue);
    // The new element lies in every stabilizer up to its level; orbits at
    // all shallower levels may grow.
    rebuild_orbits_from(0);
    finalized_ = false;
}

void StabilizerChain::finalize() {
    // Full deterministic Schreier closure: once a pass adds nothing, each
    // orbit is the exact stabilizer orbit and the order product is exact.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int l = int(levels_.size()) - 1; l >= 0 && !changed; --l) {
            Level& lv = levels_[l];
            auto gens = gens_at(l);
            for (size_t i = 0; i < lv.orbit.size() && !changed; ++i)
                for (const Perm* g : gens) {
                    int img = (*g)[lv.orbit[i]];
                    Perm schreier = perm_compose(
                        perm_compose(lv.transversal[i], *g),
                        perm_inverse(lv.transversal[lv.where[img]]));
                    auto [lvl2, residue] = sift(schreier);
                    if (lvl2 < int(levels_.size())) {
                        levels_[lvl2].inserted.push_back(residue);
                        rebuild_orbits_from(0);
                        changed = true;
                        break;
                    }
                }
        }
    }
    finalized_ = true;
}

mpz_class StabilizerChain::order() const {
    if (!finalized_)
        throw Error("StabilizerChain::order called before finalize");
    mpz_class o = 1;
    for (const auto& lv : levels_) o *= mpz_class(long(lv.orbit.size()));
    return o;
}

bool StabilizerChain::contains(const Perm& g) const {
    auto [level, residue] = sift(g);
    if (level < int(levels_.size())) return false;
    for (int i = 0; i < degree_; ++i)
        if (residue[i] != i) return false;
    return true;
}

} // namespace sdkit
