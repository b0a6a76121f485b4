#ifndef CHROMA_SUBDIVISION_HPP
#define CHROMA_SUBDIVISION_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chroma/complex.hpp"

namespace chroma {

/// One subdivision step: iteration k (1-based), dimension d. Within an
/// iteration the dimension decreases from n down to 0, so the stage order
/// is (k,d) < (k',d') iff k < k' or (k = k' and d > d').
struct StageId {
    int k = 1;
    int d = 0;

    bool operator==(const StageId& o) const { return k == o.k && d == o.d; }
    bool operator!=(const StageId& o) const { return !(*this == o); }
    bool operator<(const StageId& o) const {
        if (k != o.k) return k < o.k;
        return d > o.d;
    }
    std::string str() const { return "(" + std::to_string(k) + "," + std::to_string(d) + ")"; }
};

/// One application of the relative Schlegel subdivision: `after` refines
/// every d-simplex of base∩before, and `parent_step` carries each vertex of
/// `after` to the same-colored vertex of its carrier in `before` (identity
/// on surviving vertices).
struct Stage {
    StageId id;
    Complex before;
    Complex after;
    std::unordered_map<Label, Label, LabelHash> parent_step;
    std::vector<Simplex> subdivided;  // the refined simplexes of base∩before
};

/// Schlegel diagram of a d-simplex: for dim(sigma) == d, the facets are
/// {v in sigma : color(v) not in I} * {(i, sigma) : i in I} over all
/// nonempty subsets I of sigma's colors; otherwise the trivial subdivision
/// cls sigma. At d = 0 the single vertex is relabeled (i, {v}).
Complex schlegel_simplex(const Simplex& sigma, int d);

/// Relative Schlegel step Sch_base^k applied to `current`, which must
/// satisfy base ∩ current = skel^k base (throws PreconditionViolated
/// otherwise).
Stage schlegel_step(const Complex& base, const Complex& current, int k);

/// Standard chromatic subdivision via the composition of Schlegel steps in
/// decreasing dimension (Kozlov's construction). Throws NotPure.
Complex chromatic_subdivision(const Complex& c);

/// The ordered sequence of Schlegel stages from `input` up to Ch^K(input),
/// with parent maps per step and composite carrier/parent queries.
///
/// Positions: 0 is the input complex, p >= 1 is the complex after the p-th
/// stage; position(K*(n+1)) is the final complex Ch^K(input).
class Tower {
public:
    /// Builds all K*(n+1) stages. `input` must be pure and chromatic of
    /// dimension >= 0. Throws NotPure.
    Tower(Complex input, int K);

    int n() const { return n_; }
    int iterations() const { return K_; }
    const Complex& input() const { return input_; }
    const std::vector<Stage>& stages() const { return stages_; }
    const Complex& final_complex() const { return stages_.back().after; }

    int input_position() const { return 0; }
    int final_position() const { return static_cast<int>(stages_.size()); }

    /// Position of the complex after stage (k,d).
    int position(StageId id) const;
    /// Position at which round (k,d) is entered, i.e. just before the stage.
    int entry_position(StageId id) const { return position(id) - 1; }
    /// Position of the iteration-k base complex Ch^{k-1}(input).
    int iteration_base_position(int k) const { return (k - 1) * (n_ + 1); }

    StageId stage_id_at(int pos) const;  // pos >= 1
    const Complex& complex_at(int pos) const;
    bool has_vertex(int pos, const Label& v) const;

    /// Composition of per-stage parent maps from position `from` down to
    /// position `to` (from >= to). Throws VertexNotFound if v is not a
    /// vertex at `from`.
    Label composite_parent(int from, int to, const Label& v) const;

    ///At the final complex: shorthand for composite_parent(final, pos, v).
    Label parent_at(int pos, const Label& v) const {
        return composite_parent(final_position(), pos, v);
    }

    /// Carrier of {v} in the complex at `pos`: unfolds views until all
    /// members are vertices of that complex. v may be any vertex appearing
    /// at `pos` or later. Throws VertexNotFound when the unfolding leaves
    /// the tower's label universe.
    Simplex carrier_at(int pos, const Label& v) const;

    /// Stable content hash of (input, K, all stage complexes); used to tie
    /// tables and reports to a tower configuration.
    std::uint64_t hash() const { return hash_; }

private:
    Complex input_;
    int n_ = 0;
    int K_ = 1;
    std::vector<Stage> stages_;
    std::vector<std::unordered_set<Label, LabelHash>> vertex_sets_;  // per position
    std::uint64_t hash_ = 0;
};

}  // namespace chroma

#endif
