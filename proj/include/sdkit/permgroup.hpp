#ifndef SDKIT_PERMGROUP_HPP
#define SDKIT_PERMGROUP_HPP

#include <gmpxx.h>

#include <vector>

// Base-and-strong-generating-set bookkeeping for permutation groups on
// a modest point set (signed coordinates of a code, signed short
// vectors of a lattice). Deterministic Schreier-Sims; exact orders.

namespace sdkit {

using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b); // apply a, then b
Perm perm_inverse(const Perm& a);

// Invariants maintained cheaply during construction:
//   * every generator stored at level l fixes base[0..l-1];
//   * orbit(l) is an orbit subset of base[l] under the true stabilizer,
//     so in_orbit() == true is always trustworthy.
// finalize() runs the full Schreier closure, after which orbit(l) is the
// exact stabilizer orbit and order() is the exact group order.
class StabilizerChain {
public:
    StabilizerChain(int degree, std::vector<int> base);

    void add_generator(const Perm& g);
    void finalize();

    bool finalized() const { return finalized_; }
    mpz_class order() const; // requires finalize()
    bool contains(const Perm& g) const;

    const std::vector<int>& orbit(int level) const { return levels_[level].orbit; }
    bool in_orbit(int level, int point) const {
        return levels_[level].where[point] >= 0;
    }

    int degree() const { return degree_; }
    int depth() const { return int(base_.size()); }
    const std::vector<int>& base() const { return base_; }
    const std::vector<Perm>& external_generators() const { return external_gens_; }

private:
    struct Level {
        std::vector<Perm> inserted;    // residues rooted at this level
        std::vector<int> orbit;        // BFS order
        std::vector<int> where;        // point -> orbit index or -1
        std::vector<Perm> transversal; // transversal[i]: base point -> orbit[i]
    };

    std::vector<const Perm*> gens_at(int level) const;
    void rebuild_orbits_from(int level);
    std::pair<int, Perm> sift(const Perm& g) const;

    int degree_;
    std::vector<int> base_;
    std::vector<Level> levels_;
    std::vector<Perm> external_gens_;
    bool finalized_ = false;
};

} // namespace sdkit

#endif
