#ifndef CHROMA_COMPLEX_HPP
#define CHROMA_COMPLEX_HPP

#include <unordered_map>
#include <vector>

#include "chroma/simplex.hpp"

namespace chroma {

/// A chromatic simplicial complex stored as its facet set; closure is
/// implicit (a simplex belongs to the complex iff it is a subset of some
/// facet). Construction keeps only maximal simplexes and builds a
/// vertex-to-facet index for membership queries.
///
/// The complex with no facets at all is the void complex and contains
/// nothing; a nonempty complex contains the empty simplex.
class Complex {
public:
    Complex() = default;
    explicit Complex(std::vector<Simplex> facets);

    /// Closure of a single simplex ("cls sigma"). cls of the empty simplex
    /// is the complex whose only simplex is the empty one.
    static Complex cls(Simplex s);

    const std::vector<Simplex>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }
    bool is_void() const { return facets_.empty(); }

    /// Maximum simplex dimension; -2 for the void complex.
    int dim() const;

    /// All facets share one dimension. The void complex is vacuously pure.
    bool is_pure() const;

    /// True iff s is a subset of some facet.
    bool contains(const Simplex& s) const;
    bool has_vertex(const Label& v) const;

    /// Sorted vertex set.
    std::vector<Label> vertices() const;

    /// Every distinct simplex of the complex (all faces of all facets).
    std::vector<Simplex> all_simplexes() const;

    /// St(v, C): facets are the facets of C containing v.
    /// Throws VertexNotFound if v is not a vertex of the complex.
    Complex star(const Label& v) const;

    /// Maximum subcomplex of dimension <= k (k >= -1).
    Complex skeleton(int k) const;

    /// Join with a color-disjoint complex. Throws ColorClash if the vertex
    /// sets share a color.
    Complex join(const Complex& other) const;

    bool operator==(const Complex& other) const { return facets_ == other.facets_; }
    bool operator!=(const Complex& other) const { return !(*this == other); }

private:
    std::vector<Simplex> facets_;  // canonical: sorted, maximal only
    std::unordered_map<Label, std::vector<std::size_t>, LabelHash> by_vertex_;
};

/// Carrier of a single vertex in the original input complex, by unfolding
/// views down to base labels: Carr(base i) = {i}, Carr((i,S)) = union of
/// the members' carriers.
Simplex carrier_in_base(const Label& v);

/// Independent combinatorial oracle for membership in the standard
/// chromatic subdivision of a base simplex: the labels (i_j, tau_j) form a
/// simplex of Ch sigma iff the tau_j are linearly ordered by inclusion and
/// i_j in color(tau_k) implies tau_j subset of tau_k. Used only to
/// cross-check the Schlegel construction.
///
/// Throws MalformedLabel if a member is not a pair over faces of sigma.
bool is_ch_simplex(const Simplex& sigma, const std::vector<Label>& members);

}  // namespace chroma

#endif
