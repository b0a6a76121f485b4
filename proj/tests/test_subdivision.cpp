#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chroma/errors.hpp"
#include "chroma/subdivision.hpp"
#include "chroma/verification.hpp"

using namespace chroma;

namespace {

Label B(int c) { return Label::base(c); }
Label P(int c, std::vector<Label> view) { return Label::pair(c, std::move(view)); }

const Simplex kEdge = Simplex::of_bases({0, 1});
const Simplex kTriangle = Simplex::of_bases({0, 1, 2});

}  // namespace

TEST_CASE("schlegel of an edge has the three expected facets") {
    Complex c = schlegel_simplex(kEdge, 1);
    const Label n0 = P(0, {B(0), B(1)});
    const Label n1 = P(1, {B(0), B(1)});
    std::set<Simplex> expected{Simplex({B(0), n1}), Simplex({n0, n1}),
                               Simplex({n0, B(1)})};
    CHECK(std::set<Simplex>(c.facets().begin(), c.facets().end()) == expected);
}

TEST_CASE("schlegel facet counts and trivial cases") {
    CHECK(schlegel_simplex(kTriangle, 2).facet_count() == 7);
    CHECK(schlegel_simplex(kEdge, 2) == Complex::cls(kEdge));  // dim mismatch
    Complex point = schlegel_simplex(Simplex({B(1)}), 0);
    REQUIRE(point.facet_count() == 1);
    CHECK(point.facets()[0] == Simplex({P(1, {B(1)})}));  // vertex is relabeled
    for (int d = 0; d <= 2; ++d) {
        std::vector<int> colors;
        for (int i = 0; i <= d; ++i) colors.push_back(i);
        Simplex s = Simplex::of_bases(colors);
        CHECK(schlegel_simplex(s, d).facet_count() == (1u << (d + 1)) - 1);
    }
}

TEST_CASE("relative schlegel step") {
    Complex tri = Complex::cls(kTriangle);
    Stage top = schlegel_step(tri, tri, 2);
    CHECK(top.after.facet_count() == 7);
    CHECK(top.subdivided.size() == 1);

    Stage edges = schlegel_step(tri, top.after, 1);
    // the 1-simplex {0,1} is subdivided into three parts, each joined with
    // the central vertex of color 2
    const Label c2 = P(2, {B(0), B(1), B(2)});
    CHECK(edges.after.contains(
        Simplex({P(0, {B(0), B(1)}), P(1, {B(0), B(1)}), c2})));
    CHECK(edges.after.contains(Simplex({B(0), P(1, {B(0), B(1)}), c2})));
    CHECK(edges.after.is_pure());
    CHECK(edges.after.dim() == 2);

    // no k-simplexes to refine: the step is the identity
    Complex e = Complex::cls(kEdge);
    CHECK(schlegel_step(e, e, 2).after == e);

    // precondition: dimension-2 simplexes must be gone before the k=1 step
    CHECK_THROWS_AS(schlegel_step(tri, tri, 1), PreconditionViolated);
}

TEST_CASE("chromatic subdivision facet sets equal the partition oracle") {
    for (int d = 0; d <= 2; ++d) {
        std::vector<int> colors;
        for (int i = 0; i <= d; ++i) colors.push_back(i);
        Simplex s = Simplex::of_bases(colors);
        Complex built = chromatic_subdivision(Complex::cls(s));
        CHECK(built.facets() == ordered_partition_facets(s));
        for (const Simplex& f : built.facets())
            CHECK(is_ch_simplex(s, f.vertices()));
    }
    CHECK_THROWS_AS(
        chromatic_subdivision(Complex(
            {Simplex::of_bases({0, 1}), Simplex({B(2)})})),
        NotPure);
}

TEST_CASE("tower shape and facet counts") {
    Tower tower(Complex::cls(kTriangle), 2);
    CHECK(tower.stages().size() == 6);
    CHECK(tower.final_complex().facet_count() == 169);
    CHECK(tower.complex_at(3).facet_count() == 13);  // end of the first iteration

    Tower edge_tower(Complex::cls(kEdge), 1);
    CHECK(edge_tower.stages().size() == 2);
    CHECK(edge_tower.final_complex() ==
          chromatic_subdivision(Complex::cls(kEdge)));
    CHECK_THROWS_AS(Tower(Complex(), 1), NotPure);
    CHECK_THROWS_AS(Tower(Complex::cls(kEdge), 0), PreconditionViolated);
}

TEST_CASE("stage invariants: purity, counts, simplicial parent maps") {
    Tower tower(Complex::cls(kTriangle), 2);
    for (const Stage& stage : tower.stages()) {
        CHECK(stage.after.is_pure());
        CHECK(stage.after.dim() == stage.before.dim());
        // one facet splits into 2^{d+1}-1 when its old part has dimension d
        std::size_t expected = 0;
        const Complex& base = tower.complex_at(tower.iteration_base_position(stage.id.k));
        for (const Simplex& f : stage.before.facets()) {
            std::vector<Label> old_part;
            for (const Label& v : f.vertices())
                if (base.has_vertex(v)) old_part.push_back(v);
            Simplex sigma(old_part);
            expected += (sigma.dim() == stage.id.d)
                            ? (std::size_t{1} << (stage.id.d + 1)) - 1
                            : 1;
        }
        CHECK(stage.after.facet_count() == expected);
        // the image of every facet under the parent step is a simplex below
        for (const Simplex& f : stage.after.facets()) {
            std::vector<Label> image;
            for (const Label& v : f.vertices())
                image.push_back(stage.parent_step.at(v));
            CHECK(stage.before.contains(Simplex(image)));
        }
    }
}

TEST_CASE("composite parent") {
    Tower tower(Complex::cls(kTriangle), 2);
    const int final_pos = tower.final_position();
    const int ch_pos = tower.iteration_base_position(2);

    const Label w = P(2, {P(0, {B(0), B(1), B(2)}), P(2, {B(1), B(2)})});
    CHECK(tower.composite_parent(final_pos, ch_pos, w) == P(2, {B(1), B(2)}));
    CHECK(tower.composite_parent(ch_pos, ch_pos, P(2, {B(1), B(2)})) ==
          P(2, {B(1), B(2)}));

    // the doubly relabeled corner goes all the way down to its base vertex
    const Label corner = P(0, {P(0, {B(0)})});
    CHECK(tower.composite_parent(final_pos, 0, corner) == B(0));
    CHECK_THROWS_AS(tower.composite_parent(final_pos, 0, B(0)), VertexNotFound);

    // color preservation, for every final vertex at every position
    for (const Label& v : tower.final_complex().vertices())
        for (int pos = 0; pos <= final_pos; ++pos)
            CHECK(tower.composite_parent(final_pos, pos, v).color() == v.color());
}

TEST_CASE("carriers at tower positions") {
    Tower tower(Complex::cls(kTriangle), 2);
    const int ch_pos = tower.iteration_base_position(2);

    CHECK(tower.carrier_at(0, P(2, {B(1), B(2)})) == Simplex({B(1), B(2)}));
    CHECK(tower.carrier_at(ch_pos, P(2, {B(1), B(2)})) ==
          Simplex({P(2, {B(1), B(2)})}));

    // a final vertex built from two Ch vertices has exactly them as carrier
    const Label a = P(0, {B(0), B(1), B(2)});
    const Label b = P(2, {B(1), B(2)});
    const Label w = P(2, {a, b});
    CHECK(tower.carrier_at(ch_pos, w) == Simplex({a, b}));

    // later carriers refine earlier ones
    for (const Label& v : tower.final_complex().vertices()) {
        Simplex coarse = tower.carrier_at(0, v);
        Simplex fine = tower.carrier_at(ch_pos, v);
        std::vector<Label> lifted;
        for (const Label& u : fine.vertices()) {
            const Simplex part = tower.carrier_at(0, u);
            for (const Label& b2 : part.vertices()) lifted.push_back(b2);
        }
        CHECK(Simplex(lifted).subset_of(coarse));
    }
}

TEST_CASE("vertex counts agree between the tower and per-facet subdivision") {
    Tower tower(Complex::cls(kTriangle), 2);
    const Complex& ch = tower.complex_at(3);
    CHECK(ch.vertices().size() == 12);

    std::set<Label> direct;
    for (const Label& v : tower.final_complex().vertices()) direct.insert(v);

    std::set<Label> unioned;
    for (const Simplex& f : ch.facets()) {
        Complex piece = chromatic_subdivision(Complex::cls(f));
        for (const Label& v : piece.vertices()) unioned.insert(v);
    }
    CHECK(direct == unioned);
    CHECK(direct.size() == 99);
}

TEST_CASE("tower hash distinguishes configurations") {
    Tower a(Complex::cls(kTriangle), 1);
    Tower b(Complex::cls(kTriangle), 2);
    Tower c(Complex::cls(kEdge), 1);
    CHECK(a.hash() != b.hash());
    CHECK(a.hash() != c.hash());
    CHECK(a.hash() == Tower(Complex::cls(kTriangle), 1).hash());
}
