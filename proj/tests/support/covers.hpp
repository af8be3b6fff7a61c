#pragma once

// Cover families shared by the unit and acceptance tests.

#include "partot/cover.hpp"
#include "partot/simplicial_complex.hpp"

#include <random>
#include <string>
#include <vector>

namespace partot::testing {

/// Pieces generated by the listed facets of X (facets given by labels).
inline SimplicialComplex piece_of(const std::vector<std::vector<Label>>& facets) {
    return generated_subcomplex(facets);
}

/// Sigma K covered by its two cones; basepoint is the first vertex of K.
inline CoverDiagram suspension_cover(const SimplicialComplex& k) {
    const auto x = unreduced_suspension(k, Label("N"), Label("S"));
    std::vector<std::vector<Label>> north, south;
    for (const auto& f : k.facet_labels()) {
        auto a = f;
        a.emplace_back("N");
        north.push_back(a);
        a.back() = Label("S");
        south.push_back(a);
    }
    return cover_from_subcomplexes(x, {piece_of(north), piece_of(south)}, k.vertices().front());
}

/// Suspension of an m-gon (a 2-sphere) cut into three lunes along the
/// meridians through v0, va and vb (0 < a < b < m). Pairwise intersections
/// are meridians, the triple intersection is the two poles; basepoint N.
inline CoverDiagram lune_cover(int m, int a, int b) {
    auto v = [](int i) { return Label("v" + std::to_string(i)); };
    std::vector<std::vector<Label>> all;
    std::vector<std::vector<std::vector<Label>>> lunes(3);
    for (int i = 0; i < m; ++i) {
        const int piece = i < a ? 0 : (i < b ? 1 : 2);
        for (const char* pole : {"N", "S"}) {
            std::vector<Label> tri{v(i), v((i + 1) % m), Label(pole)};
            all.push_back(tri);
            lunes[static_cast<std::size_t>(piece)].push_back(tri);
        }
    }
    return cover_from_subcomplexes(complex_from_facets(all), {piece_of(lunes[0]), piece_of(lunes[1]), piece_of(lunes[2])},
                                   Label("N"));
}

/// Subdivided 2-simplex covered by the closed stars of its three corners;
/// all intersections contain the barycenter.
inline CoverDiagram star_cover_of_triangle() {
    const auto x = barycentric_subdivision(full_simplex(3));
    std::vector<SimplicialComplex> stars;
    for (const char* corner : {"[0]", "[1]", "[2]"}) {
        std::vector<std::vector<Label>> fs;
        for (const auto& f : x.facet_labels())
            if (std::find(f.begin(), f.end(), Label(corner)) != f.end()) fs.push_back(f);
        stars.push_back(piece_of(fs));
    }
    return cover_from_subcomplexes(x, stars, Label("[0,1,2]"));
}

/// Random complex on at most `vertices` vertices with a random cover by
/// `pieces` subcomplexes, optionally sharing a basepoint.
inline CoverDiagram random_cover(std::mt19937& rng, int vertices, int facets, int pieces, bool pointed) {
    std::vector<std::vector<Label>> fs;
    for (int f = 0; f < facets; ++f) {
        std::vector<int> perm(static_cast<std::size_t>(vertices));
        for (int i = 0; i < vertices; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const int size = 1 + static_cast<int>(rng() % 3);
        std::vector<Label> facet;
        for (int i = 0; i < size; ++i) facet.emplace_back(perm[static_cast<std::size_t>(i)]);
        fs.push_back(facet);
    }
    const auto x = complex_from_facets(fs);
    const auto labels = x.facet_labels();
    const Label base = x.vertices()[rng() % x.vertices().size()];
    std::vector<std::vector<std::vector<Label>>> assigned(static_cast<std::size_t>(pieces));
    for (const auto& f : labels) {
        assigned[rng() % assigned.size()].push_back(f);
        if (rng() % 3 == 0) assigned[rng() % assigned.size()].push_back(f);
    }
    std::vector<SimplicialComplex> ps;
    for (auto& a : assigned) {
        if (pointed || a.empty()) a.push_back({pointed ? base : labels.front().front()});
        ps.push_back(piece_of(a));
    }
    return cover_from_subcomplexes(x, ps, pointed ? std::optional<Label>(base) : std::nullopt);
}

} // namespace partot::testing
