#include "projcode/constructions.hpp"

namespace projcode {

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

// Binary [15,4]_2 example: lines L1 = <u1,u2>, L2 = <v1,v2>, L3 = <w1,w2>,
// each listed with its third nonzero vector.
const Rows kL1 = {
    {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0},
};
const Rows kL2 = {
    {0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0},
    {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1},
};
const Rows kL3 = {
    {0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1},
    {1, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 1},
    {1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0},
};
// Displayed generator matrices of L1+L2 and L2+L3.
const Rows kBinaryX = {
    {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0},
};
const Rows kBinaryY = {
    {0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0},
    {0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1},
    {1, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 1},
};

// Ternary [13,3]_3 example.
const Rows kTernaryX = {
    {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 1, 1, 0, 0, 0, 1, 2, 1, 1, 2, 2},
    {1, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1, 2},
};
const Rows kTernaryY = {
    {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 0, 1, 1, 0, 0, 2, 0, 1, 1, 1, 2, 2},
    {2, 1, 0, 1, 0, 1, 0, 2, 0, 1, 2, 1, 2},
};
const std::vector<Rows> kTernaryCandidates = {
    // w, v1, u1
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 0, 0, 1, 2, 1, 1, 2, 2}, {1, 0, 1, 1, 0, 0, 2, 0, 1, 1, 1, 2, 2}},
    // w, v1, u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 0, 0, 1, 2, 1, 1, 2, 2}, {2, 1, 0, 1, 0, 1, 0, 2, 0, 1, 2, 1, 2}},
    // w, v1, u1+u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 0, 0, 1, 2, 1, 1, 2, 2}, {0, 1, 1, 2, 0, 1, 2, 2, 1, 2, 0, 0, 1}},
    // w, v1, u1+2u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 1, 1, 0, 0, 0, 1, 2, 1, 1, 2, 2}, {2, 2, 1, 0, 0, 2, 2, 1, 1, 0, 2, 1, 0}},
    // w, v2, u1
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1, 2}, {1, 0, 1, 1, 0, 0, 2, 0, 1, 1, 1, 2, 2}},
    // w, v2, u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1, 2}, {2, 1, 0, 1, 0, 1, 0, 2, 0, 1, 2, 1, 2}},
    // w, v2, u1+u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1, 2}, {0, 1, 1, 2, 0, 1, 2, 2, 1, 2, 0, 0, 1}},
    // w, v2, u1+2u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 0, 1, 2, 0, 0, 1, 2, 1, 2}, {2, 2, 1, 0, 0, 2, 2, 1, 1, 0, 2, 1, 0}},
    // w, v1+v2, u1
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 2, 0, 0, 1, 2, 1, 2, 2, 0, 0, 1}, {1, 0, 1, 1, 0, 0, 2, 0, 1, 1, 1, 2, 2}},
    // w, v1+v2, u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 2, 0, 0, 1, 2, 1, 2, 2, 0, 0, 1}, {2, 1, 0, 1, 0, 1, 0, 2, 0, 1, 2, 1, 2}},
    // w, v1+v2, u1+u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 2, 0, 0, 1, 2, 1, 2, 2, 0, 0, 1}, {0, 1, 1, 2, 0, 1, 2, 2, 1, 2, 0, 0, 1}},
    // w, v1+v2, u1+2u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 2, 0, 0, 1, 2, 1, 2, 2, 0, 0, 1}, {2, 2, 1, 0, 0, 2, 2, 1, 1, 0, 2, 1, 0}},
    // w, v1+2v2, u1
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {2, 1, 0, 2, 0, 2, 1, 1, 2, 0, 2, 1, 0}, {1, 0, 1, 1, 0, 0, 2, 0, 1, 1, 1, 2, 2}},
    // w, v1+2v2, u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {2, 1, 0, 2, 0, 2, 1, 1, 2, 0, 2, 1, 0}, {2, 1, 0, 1, 0, 1, 0, 2, 0, 1, 2, 1, 2}},
    // w, v1+2v2, u1+u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {2, 1, 0, 2, 0, 2, 1, 1, 2, 0, 2, 1, 0}, {0, 1, 1, 2, 0, 1, 2, 2, 1, 2, 0, 0, 1}},
    // w, v1+2v2, u1+2u2
    {{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {2, 1, 0, 2, 0, 2, 1, 1, 2, 0, 2, 1, 0}, {2, 2, 1, 0, 0, 2, 2, 1, 1, 0, 2, 1, 0}},
};

void require_fixture(bool ok, const char* what) {
    if (!ok) throw ConstructionError(std::string("fixture check failed: ") + what);
}

} // namespace

BinaryFixtureLines binary_fixture_lines() {
    const Field& f = Field::get(2);
    return {Matrix::from_rows(f, kL1), Matrix::from_rows(f, kL2), Matrix::from_rows(f, kL3)};
}

ConstructionPair fixture_binary_15_4() {
    const Field& f = Field::get(2);
    Matrix gx = Matrix::from_rows(f, kBinaryX);
    Matrix gy = Matrix::from_rows(f, kBinaryY);
    ConstructionPair pair{canonicalize(gx), canonicalize(gy), gx, gy, 15, 4, 2, 2, Provenance::kFixtureBinary};
    require_fixture(pair.x.dim() == 4 && pair.y.dim() == 4, "binary generator ranks");
    return pair;
}

TernaryFixture fixture_ternary_13_3() {
    const Field& f = Field::get(3);
    Matrix gx = Matrix::from_rows(f, kTernaryX);
    Matrix gy = Matrix::from_rows(f, kTernaryY);
    TernaryFixture out{{canonicalize(gx), canonicalize(gy), gx, gy, 13, 3, 3, 1, Provenance::kFixtureTernary}, {}};
    require_fixture(out.pair.x.dim() == 3 && out.pair.y.dim() == 3, "ternary generator ranks");
    for (const auto& rows : kTernaryCandidates) out.candidates.push_back(Matrix::from_rows(f, rows));
    return out;
}

std::uint64_t fixture_checksum() {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const Rows& rows) {
        for (const auto& r : rows)
            for (auto v : r) h = (h ^ v) * 1099511628211ull;
        h = (h ^ 0xff) * 1099511628211ull;
    };
    feed(kL1);
    feed(kL2);
    feed(kL3);
    feed(kBinaryX);
    feed(kBinaryY);
    feed(kTernaryX);
    feed(kTernaryY);
    for (const auto& c : kTernaryCandidates) feed(c);
    return h;
}

} // namespace projcode
