#ifndef CHROMA_SIMPLEX_HPP
#define CHROMA_SIMPLEX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "chroma/label.hpp"

namespace chroma {

/// A chromatic simplex: a set of labels with pairwise-distinct colors,
/// stored in canonical order. The empty simplex has dimension -1.
class Simplex {
public:
    Simplex() = default;

    /// Throws ColorClash if two distinct members share a color.
    explicit Simplex(std::vector<Label> verts);
    Simplex(std::initializer_list<Label> verts);

    /// Convenience: simplex of base labels, e.g. base_simplex({0,1,2}).
    static Simplex of_bases(const std::vector<Color>& colors);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    bool empty() const { return verts_.empty(); }
    std::size_t size() const { return verts_.size(); }
    const std::vector<Label>& vertices() const { return verts_; }

    bool has_vertex(const Label& v) const;
    bool subset_of(const Simplex& other) const;

    /// The member of the given color, if any.
    const Label* vertex_of_color(Color c) const;

    std::vector<Color> colors() const;

    /// Join with a color-disjoint simplex (union of vertex sets).
    /// Throws ColorClash when colors overlap.
    Simplex join(const Simplex& other) const;

    /// All subsets, the empty simplex included.
    std::vector<Simplex> faces() const;

    bool operator==(const Simplex& other) const { return verts_ == other.verts_; }
    bool operator!=(const Simplex& other) const { return !(*this == other); }
    bool operator<(const Simplex& other) const;

    std::size_t hash() const;
    std::string str() const;

private:
    std::vector<Label> verts_;  // sorted, colors pairwise distinct
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const { return s.hash(); }
};

}  // namespace chroma

#endif
