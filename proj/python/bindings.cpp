#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projcode/codes.hpp"
#include "projcode/constructions.hpp"
#include "projcode/graphs.hpp"
#include "projcode/verify.hpp"

namespace py = pybind11;
using namespace projcode;

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

Subspace subspace(const Rows& rows, std::uint32_t q, std::size_t n) {
    return canonicalize(Matrix::from_rows(Field::of_order(q), rows, n));
}

Rows to_rows(const Matrix& m) {
    Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

py::int_ big(const BigInt& b) { return py::int_(py::str(b.str())); }

py::dict pair_dict(const ConstructionPair& p) {
    py::dict d;
    d["x"] = to_rows(p.x_generator);
    d["y"] = to_rows(p.y_generator);
    d["n"] = p.n;
    d["k"] = p.k;
    d["q"] = p.q;
    d["expected_meet"] = p.expected_meet;
    d["meet"] = intersect_dim(p.x, p.y);
    d["provenance"] = to_string(p.provenance);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Projective linear codes over small finite fields";
    m.attr("__version__") = kVersion;

    m.def("bracket", [](std::uint64_t k, std::uint64_t q) { return bracket(k, q); }, py::arg("m"), py::arg("q"));
    m.def("gaussian_binomial", [](std::uint64_t n, std::uint64_t k, std::uint64_t q) { return big(gaussian_binomial(n, k, q)); },
          py::arg("n"), py::arg("k"), py::arg("q"));

    m.def("canonical_form", [](const Rows& rows, std::uint32_t q, std::size_t n) { return to_rows(subspace(rows, q, n).basis()); },
          py::arg("rows"), py::arg("q"), py::arg("n") = 0, "RREF basis with zero rows dropped");
    m.def("rank", [](const Rows& rows, std::uint32_t q) { return subspace(rows, q, 0).dim(); }, py::arg("rows"),
          py::arg("q"));
    m.def("intersect_dim",
          [](const Rows& x, const Rows& y, std::uint32_t q) { return intersect_dim(subspace(x, q, 0), subspace(y, q, 0)); },
          py::arg("x"), py::arg("y"), py::arg("q"));
    m.def("is_projective", [](const Rows& rows, std::uint32_t q) { return is_projective(subspace(rows, q, 0)); },
          py::arg("rows"), py::arg("q"));
    m.def("is_simplex_code", [](const Rows& rows, std::uint32_t q) { return is_simplex_code(subspace(rows, q, 0)); },
          py::arg("rows"), py::arg("q"));
    m.def(
        "profile",
        [](const Rows& rows, std::uint32_t q) {
            const CodeProfile p = profile(subspace(rows, q, 0));
            py::dict d;
            d["n"] = p.n;
            d["k"] = p.k;
            d["q"] = p.q;
            d["nondegenerate"] = p.nondegenerate;
            d["projective"] = p.projective;
            d["simplex"] = p.simplex;
            d["weight_distribution"] = p.weight_distribution;
            return d;
        },
        py::arg("rows"), py::arg("q"));
    m.def(
        "is_simplex_vector",
        [](const std::vector<Elem>& v, std::uint32_t q, std::size_t k) { return is_simplex_vector(v, Field::of_order(q), k); },
        py::arg("v"), py::arg("q"), py::arg("k"));

    m.def("simplex_generator", [](std::size_t k, std::uint32_t q) { return to_rows(simplex_generator_matrix(Field::of_order(q), k)); },
          py::arg("k"), py::arg("q"));
    m.def(
        "construction_pair",
        [](std::size_t n, std::size_t k, std::uint32_t q, const std::string& method) {
            const Field& f = Field::of_order(q);
            if (method == "lemma14") return pair_dict(lemma14_pair(n, k, f));
            if (method == "remark1") return pair_dict(remark1_pair(n, k, f));
            if (method == "auto") return pair_dict(construction_pair(n, k, f));
            throw std::invalid_argument("method must be auto, lemma14 or remark1");
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("method") = "auto");
    m.def(
        "fixture",
        [](const std::string& name) {
            if (name == "binary-15-4") return pair_dict(fixture_binary_15_4());
            if (name == "ternary-13-3") {
                auto fx = fixture_ternary_13_3();
                py::dict d = pair_dict(fx.pair);
                py::list cands;
                for (const auto& c : fx.candidates) cands.append(to_rows(c));
                d["candidates"] = cands;
                return d;
            }
            throw std::invalid_argument("unknown fixture " + name);
        },
        py::arg("name"));
    m.def(
        "common_projective_neighbors",
        [](const Rows& x, const Rows& y, std::uint32_t q) {
            auto cn = common_projective_neighbors(subspace(x, q, 0), subspace(y, q, 0));
            py::dict d;
            py::list cands, proj;
            for (const auto& z : cn.candidates) cands.append(to_rows(z.basis()));
            for (const auto& z : cn.projective) proj.append(to_rows(z.basis()));
            d["candidates"] = cands;
            d["projective"] = proj;
            return d;
        },
        py::arg("x"), py::arg("y"), py::arg("q"));

    m.def("grassmann_geodesic_count", [](std::size_t m_, std::uint32_t q) { return big(grassmann_geodesic_count(m_, q)); },
          py::arg("m"), py::arg("q"));
    m.def(
        "build_graph_json",
        [](std::size_t n, std::size_t k, std::uint32_t q, const std::string& predicate) {
            return to_json(build_graph(n, k, q, parse_predicate(predicate))).dump();
        },
        py::arg("n"), py::arg("k"), py::arg("q"), py::arg("predicate") = "projective");
    m.def(
        "verify_json",
        [](const std::string& claim, const std::vector<std::uint64_t>& params, std::uint64_t seed, const std::string& variant,
           const std::string& fixture, std::size_t trials, std::size_t dim_u) {
            ClaimRequest req;
            req.claim = claim;
            req.params = params;
            req.seed = seed;
            req.variant = variant;
            req.fixture = fixture;
            req.trials = trials;
            req.dim_u = dim_u;
            std::vector<VerificationReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_claim(req);
            }
            nlohmann::json out = nlohmann::json::array();
            for (const auto& r : reports) out.push_back(r.to_json());
            return out.dump();
        },
        py::arg("claim"), py::arg("params") = std::vector<std::uint64_t>{}, py::arg("seed") = kDefaultSeed,
        py::arg("variant") = "standard", py::arg("fixture") = "", py::arg("trials") = 0, py::arg("dim_u") = 0);

    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<NotCoveredError>(m, "NotCoveredError", PyExc_ValueError);
}
