#include "chroma/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

Simplex::Simplex(std::vector<Label> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (std::size_t i = 1; i < verts_.size(); ++i) {
        if (verts_[i].color() == verts_[i - 1].color())
            throw ColorClash("simplex with two vertices of color " +
                             std::to_string(verts_[i].color()) + ": " +
                             verts_[i - 1].str() + " and " + verts_[i].str());
    }
}

Simplex::Simplex(std::initializer_list<Label> verts)
    : Simplex(std::vector<Label>(verts)) {}

Simplex Simplex::of_bases(const std::vector<Color>& colors) {
    std::vector<Label> verts;
    verts.reserve(colors.size());
    for (Color c : colors) verts.push_back(Label::base(c));
    return Simplex(std::move(verts));
}

bool Simplex::has_vertex(const Label& v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(),
                         verts_.end());
}

const Label* Simplex::vertex_of_color(Color c) const {
    for (const Label& v : verts_)
        if (v.color() == c) return &v;
    return nullptr;
}

std::vector<Color> Simplex::colors() const {
    std::vector<Color> cs;
    cs.reserve(verts_.size());
    for (const Label& v : verts_) cs.push_back(v.color());
    std::sort(cs.begin(), cs.end());
    return cs;
}

Simplex Simplex::join(const Simplex& other) const {
    std::vector<Label> verts = verts_;
    verts.insert(verts.end(), other.verts_.begin(), other.verts_.end());
    return Simplex(std::move(verts));  // ColorClash surfaces here
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    const std::size_t n = verts_.size();
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Label> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(verts_[i]);
        out.emplace_back(std::move(sub));
    }
    return out;
}

bool Simplex::operator<(const Simplex& other) const {
    return std::lexicographical_compare(verts_.begin(), verts_.end(),
                                        other.verts_.begin(), other.verts_.end());
}

std::size_t Simplex::hash() const {
    std::size_t h = 0x5bd1e995;
    for (const Label& v : verts_)
        h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Label& v : verts_) {
        if (!first) os << ',';
        first = false;
        os << v.str();
    }
    os << '}';
    return os.str();
}

}  // namespace chroma
