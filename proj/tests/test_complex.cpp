#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chroma/complex.hpp"
#include "chroma/errors.hpp"
#include "chroma/subdivision.hpp"

using namespace chroma;

namespace {

Label B(int c) { return Label::base(c); }
Label P(int c, std::vector<Label> view) { return Label::pair(c, std::move(view)); }

const Simplex kTriangle = Simplex::of_bases({0, 1, 2});

}  // namespace

TEST_CASE("label invariants") {
    CHECK_THROWS_AS(Label::pair(0, {}), MalformedLabel);
    CHECK_THROWS_AS(Label::pair(2, {B(0), B(1)}), MalformedLabel);  // no own color
    CHECK_THROWS_AS(Label::pair(0, {B(0), P(0, {B(0)})}), MalformedLabel);
    CHECK(P(1, {B(1), B(0)}) == P(1, {B(0), B(1)}));  // view is a set
}

TEST_CASE("label canonical order is total") {
    Tower tower(Complex::cls(kTriangle), 2);
    std::vector<Label> all;
    for (int pos = 0; pos <= tower.final_position(); ++pos)
        for (const Label& v : tower.complex_at(pos).vertices()) all.push_back(v);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i) {
        const int c = all[i - 1].compare(all[i]);
        CHECK(c <= 0);
        CHECK((c == 0) == (all[i - 1] == all[i]));
    }
}

TEST_CASE("simplex basics") {
    CHECK(Simplex().dim() == -1);
    CHECK(kTriangle.dim() == 2);
    CHECK_THROWS_AS(Simplex({B(0), P(0, {B(0)})}), ColorClash);
    CHECK(Simplex({B(0), B(1)}).join(Simplex()) == Simplex({B(0), B(1)}));
    CHECK_THROWS_AS(Simplex({B(0)}).join(Simplex({B(0), B(1)})), ColorClash);
}

TEST_CASE("join matches the subdivision step it comes from") {
    // {0,1} * {(2,{0,1,2})} as in the second Schlegel panel
    Simplex left = Simplex::of_bases({0, 1});
    Simplex right({P(2, {B(0), B(1), B(2)})});
    Simplex joined = left.join(right);
    CHECK(joined.size() == 3);
    CHECK(joined.has_vertex(P(2, {B(0), B(1), B(2)})));
}

TEST_CASE("contains") {
    Complex tri = Complex::cls(kTriangle);
    CHECK(tri.contains(Simplex({B(0), B(2)})));
    CHECK(tri.contains(Simplex()));
    CHECK_FALSE(Complex().contains(Simplex()));  // the void complex holds nothing

    // this pair satisfies the nesting condition but not immediacy, so the
    // subdivision must not contain it
    Complex ch = chromatic_subdivision(tri);
    Simplex bogus({P(2, {B(1), B(2)}), P(1, {B(0), B(1), B(2)})});
    CHECK_FALSE(ch.contains(bogus));
}

TEST_CASE("closure: all faces of contained simplexes are contained") {
    Complex ch = chromatic_subdivision(Complex::cls(kTriangle));
    for (const Simplex& f : ch.facets())
        for (const Simplex& face : f.faces()) CHECK(ch.contains(face));
}

TEST_CASE("join of complexes") {
    Complex a = Complex::cls(Simplex({B(0)}));
    Complex b = Complex::cls(Simplex({B(1)}));
    Complex joined = a.join(b);
    REQUIRE(joined.facet_count() == 1);
    CHECK(joined.facets()[0] == Simplex({B(0), B(1)}));
    CHECK_THROWS_AS(a.join(a), ColorClash);
}

TEST_CASE("star") {
    Complex tri = Complex::cls(kTriangle);
    CHECK(tri.star(B(2)) == tri);
    CHECK_THROWS_AS(tri.star(P(0, {B(0)})), VertexNotFound);

    // every facet of a star contains the vertex, across tower stages
    Tower tower(Complex::cls(kTriangle), 1);
    for (int pos = 0; pos <= tower.final_position(); ++pos) {
        const Complex& c = tower.complex_at(pos);
        for (const Label& v : c.vertices())
            for (const Simplex& f : c.star(v).facets()) CHECK(f.has_vertex(v));
    }
}

TEST_CASE("star of a mid-tower vertex stays inside its stage") {
    Tower tower(Complex::cls(kTriangle), 1);
    const Complex& after11 = tower.complex_at(tower.position({1, 1}));
    const Label v = P(2, {B(1), B(2)});
    Complex st = after11.star(v);
    CHECK(st.facet_count() > 0);
    for (const Simplex& f : st.facets()) {
        CHECK(f.has_vertex(v));
        CHECK(after11.contains(f));
    }
}

TEST_CASE("skeleton") {
    Complex tri = Complex::cls(kTriangle);
    Complex skel1 = tri.skeleton(1);
    CHECK(skel1.facet_count() == 3);
    CHECK(skel1.dim() == 1);
    CHECK(tri.skeleton(2) == tri);
    CHECK(tri.skeleton(-1) == Complex::cls(Simplex()));

    Complex ch = chromatic_subdivision(tri);
    CHECK(ch.skeleton(0).facet_count() == 12);  // 12 vertices of Ch

    // skeleton(skeleton(C,k),j) = skeleton(C,min(k,j))
    for (int k = 0; k <= 2; ++k)
        for (int j = 0; j <= 2; ++j)
            CHECK(ch.skeleton(k).skeleton(j) == ch.skeleton(std::min(k, j)));
}

TEST_CASE("carrier in the base complex") {
    CHECK(carrier_in_base(P(2, {B(1), B(2)})) == Simplex({B(1), B(2)}));
    CHECK(carrier_in_base(B(0)) == Simplex({B(0)}));
    const Label nested = P(2, {P(0, {B(0), B(1), B(2)}), P(2, {B(1), B(2)})});
    CHECK(carrier_in_base(nested) == kTriangle);
}

TEST_CASE("chromatic subdivision membership oracle") {
    const Label full0 = P(0, {B(0), B(1), B(2)});
    CHECK(is_ch_simplex(kTriangle, {P(1, {B(1), B(2)}), P(2, {B(1), B(2)}), full0}));
    CHECK(is_ch_simplex(kTriangle, {P(1, {B(1)})}));
    // nested but not immediate: 1 occurs in {1,2} yet {0,1,2} is no subset
    CHECK_FALSE(
        is_ch_simplex(kTriangle, {P(2, {B(1), B(2)}), P(1, {B(0), B(1), B(2)})}));
    // not linearly ordered
    CHECK_FALSE(is_ch_simplex(kTriangle, {P(0, {B(0), B(1)}), P(2, {B(1), B(2)})}));
    CHECK_THROWS_AS(is_ch_simplex(kTriangle, {B(0)}), MalformedLabel);
    CHECK_THROWS_AS(is_ch_simplex(Simplex::of_bases({0, 1}), {P(2, {B(1), B(2)})}),
                    MalformedLabel);
}

TEST_CASE("every operation returns chromatic simplexes") {
    Complex ch = chromatic_subdivision(Complex::cls(kTriangle));
    for (const Simplex& f : ch.facets()) {
        std::vector<Color> cs = f.colors();
        CHECK(std::adjacent_find(cs.begin(), cs.end()) == cs.end());
    }
}
