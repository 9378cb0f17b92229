#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "inckk/compression.hpp"
#include "inckk/inc.hpp"
#include "inckk/io.hpp"
#include "inckk/numeric.hpp"
#include "inckk/oracle.hpp"
#include "inckk/simplicial.hpp"

namespace py = pybind11;
using namespace inckk;

namespace {

using Rows = std::vector<std::vector<int>>;
using Grades = std::map<int, Rows>;

DSet to_dset(const std::vector<int>& elems) { return DSet(elems); }

Family to_family(const Rows& rows, std::optional<int> d) {
    if (rows.empty() && !d)
        throw std::invalid_argument("an empty family needs an explicit cardinality d");
    int dd = d ? *d : static_cast<int>(rows.front().size());
    std::vector<DSet> members;
    members.reserve(rows.size());
    for (const auto& row : rows) members.push_back(DSet(row));
    return Family(dd, std::move(members));
}

Rows from_family(const Family& f) {
    Rows rows;
    rows.reserve(f.size());
    for (const DSet& u : f) rows.push_back(u.elements());
    return rows;
}

SimplicialComplex to_complex(const Grades& grades) {
    std::map<int, Family> built;
    for (const auto& [d, rows] : grades) {
        Family fam = to_family(rows, d);
        if (!fam.empty()) built.emplace(d, std::move(fam));
    }
    return SimplicialComplex::from_grades(std::move(built));
}

Grades from_complex(const SimplicialComplex& dl) {
    Grades out;
    for (const auto& [d, fam] : dl.grades()) out.emplace(d, from_family(fam));
    return out;
}

int ordering_int(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return -1;
    if (o == std::strong_ordering::greater) return 1;
    return 0;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["d"] = r.d;
    d["m"] = r.m;
    d["checked"] = r.checked;
    d["violation_count"] = r.violation_count;
    py::list violations;
    for (const Family& f : r.violations) violations.append(from_family(f));
    d["violations"] = violations;
    d["minimum"] = r.minimum;
    d["minimizer_count"] = r.minimizer_count;
    py::list minimizers;
    for (const Family& f : r.minimizers) minimizers.append(from_family(f));
    d["minimizers"] = minimizers;
    d["elapsed_seconds"] = r.elapsed_seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_inckk, m) {
    m.doc() = "Exact combinatorics of the squashed order, compressions, and monoid images";

    m.def("rank", [](const std::vector<int>& u) { return rank(to_dset(u)); },
          py::arg("dset"), "1-based position of a d-set in the squashed order");
    m.def("unrank",
          [](uint64_t m, int d) { return unrank(m, d).elements(); },
          py::arg("m"), py::arg("d"), "The m-th d-set in the squashed order");
    m.def("binomial_rep",
          [](uint64_t m, int d) {
              std::vector<std::pair<uint64_t, int>> out;
              for (const auto& t : binomial_rep(m, d).terms()) out.emplace_back(t.a, t.i);
              return out;
          },
          py::arg("m"), py::arg("d"), "Greedy d-binomial representation as (a, i) pairs");
    m.def("squashed_cmp",
          [](const std::vector<int>& u, const std::vector<int>& v) {
              return ordering_int(squashed_cmp(to_dset(u), to_dset(v)));
          },
          py::arg("u"), py::arg("v"), "-1, 0, or 1 in the squashed order");
    m.def("borel_leq",
          [](const std::vector<int>& u, const std::vector<int>& v) {
              return borel_leq(to_dset(u), to_dset(v));
          },
          py::arg("u"), py::arg("v"));
    m.def("family_cmp",
          [](const Rows& f, const Rows& g, std::optional<int> d) {
              return ordering_int(family_squashed_cmp(to_family(f, d), to_family(g, d)));
          },
          py::arg("f"), py::arg("g"), py::arg("d") = std::nullopt);
    m.def("shift_by",
          [](const std::vector<int>& u, int k) { return shift_by(to_dset(u), k).elements(); },
          py::arg("dset"), py::arg("k"));
    m.def("apply_pi",
          [](int i, const std::vector<int>& u) { return apply_pi(i, to_dset(u)).elements(); },
          py::arg("i"), py::arg("dset"));

    m.def("inc_image_set",
          [](const std::vector<int>& u) { return from_family(inc_image(to_dset(u))); },
          py::arg("dset"), "The d+1 images of one set under the monoid");
    m.def("inc_image",
          [](const Rows& f, std::optional<int> d) {
              return from_family(inc_image(to_family(f, d)));
          },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("inc_iterate",
          [](const Rows& f, int t, std::optional<int> d) {
              return from_family(inc_iterate(to_family(f, d), t));
          },
          py::arg("family"), py::arg("steps"), py::arg("d") = std::nullopt);
    m.def("comb_shift",
          [](int i, const Rows& f, std::optional<int> d) {
              return from_family(comb_shift(i, to_family(f, d)));
          },
          py::arg("i"), py::arg("family"), py::arg("d") = std::nullopt);

    m.def("shadow",
          [](const Rows& f, std::optional<int> d) { return from_family(shadow(to_family(f, d))); },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("initial_segment",
          [](const std::vector<int>& u) { return from_family(initial_segment(to_dset(u))); },
          py::arg("dset"));
    m.def("borel_ideal",
          [](const std::vector<int>& u) { return from_family(borel_ideal(to_dset(u))); },
          py::arg("dset"));
    m.def("compress",
          [](const Rows& f, int above, std::optional<int> d) {
              return from_family(compress_above(to_family(f, d), above));
          },
          py::arg("family"), py::arg("above") = 0, py::arg("d") = std::nullopt);
    m.def("compressed_family",
          [](uint64_t m, int d) { return from_family(compressed_family(m, d)); },
          py::arg("m"), py::arg("d"), "The first m d-sets in the squashed order");
    m.def("left_compress",
          [](const Rows& f, std::optional<int> d) {
              return from_family(left_compress(to_family(f, d)));
          },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("right_compress",
          [](const Rows& f, std::optional<int> d) {
              return from_family(right_compress(to_family(f, d)));
          },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("fixpoint",
          [](const Rows& f, std::optional<int> d) { return from_family(fixpoint(to_family(f, d))); },
          py::arg("family"), py::arg("d") = std::nullopt,
          "Stable family under alternating left/right partial compressions");
    m.def("slice_first",
          [](const Rows& f, int k, std::optional<int> d) {
              return from_family(slice_first(to_family(f, d), k));
          },
          py::arg("family"), py::arg("k"), py::arg("d") = std::nullopt);
    m.def("slice_last",
          [](const Rows& f, int k, std::optional<int> d) {
              return from_family(slice_last(to_family(f, d), k));
          },
          py::arg("family"), py::arg("k"), py::arg("d") = std::nullopt);
    m.def("is_compressed",
          [](const Rows& f, std::optional<int> d) { return is_compressed(to_family(f, d)); },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("is_shifted",
          [](const Rows& f, std::optional<int> d) { return is_shifted(to_family(f, d)); },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("is_left_compressed",
          [](const Rows& f, std::optional<int> d) { return is_left_compressed(to_family(f, d)); },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("is_right_compressed",
          [](const Rows& f, std::optional<int> d) { return is_right_compressed(to_family(f, d)); },
          py::arg("family"), py::arg("d") = std::nullopt);

    m.def("shadow_num", &shadow_num, py::arg("m"), py::arg("d"));
    m.def("inc_num", &inc_num, py::arg("m"), py::arg("d"));
    m.def("kk_feasible",
          [](const std::vector<uint64_t>& entries) -> std::pair<bool, std::optional<int>> {
              auto v = kk_violation(FVector(entries));
              return {!v.has_value(), v};
          },
          py::arg("fvector"), "(feasible, first violating cardinality or None)");
    m.def("chain_feasible",
          [](const std::vector<std::vector<uint64_t>>& rows)
              -> std::tuple<bool, std::optional<size_t>, std::optional<int>,
                            std::optional<std::string>> {
              std::vector<FVector> vecs;
              for (const auto& row : rows) vecs.push_back(FVector(row));
              auto v = chain_violation(FVectorChain(std::move(vecs)));
              if (!v) return {true, std::nullopt, std::nullopt, std::nullopt};
              return {false, v->n, v->d,
                      v->which == ChainInequality::shadow ? "shadow" : "growth"};
          },
          py::arg("chain"), "(feasible, n, d, inequality)");

    m.def("validate_complex", [](const Grades& g) { return from_complex(to_complex(g)); },
          py::arg("grades"), "Raises ValueError when closure fails");
    m.def("complex_f_vector",
          [](const Grades& g) { return to_complex(g).f_vector().entries(); }, py::arg("grades"));
    m.def("inc_complex",
          [](const Grades& g) { return from_complex(inc_complex(to_complex(g))); },
          py::arg("grades"));
    m.def("compress_complex",
          [](const Grades& g) { return from_complex(compress_complex(to_complex(g))); },
          py::arg("grades"));
    m.def("non_faces",
          [](const Grades& g, int n) {
              Grades out;
              for (const auto& [d, fam] : non_faces(to_complex(g), n))
                  out.emplace(d, from_family(fam));
              return out;
          },
          py::arg("grades"), py::arg("n"));
    m.def("check_chain",
          [](const std::vector<Grades>& chain)
              -> std::tuple<bool, std::optional<size_t>, std::optional<std::vector<int>>> {
              std::vector<SimplicialComplex> complexes;
              for (const auto& g : chain) complexes.push_back(to_complex(g));
              auto v = check_chain(complexes);
              if (!v) return {true, std::nullopt, std::nullopt};
              return {false, v->n, v->face.elements()};
          },
          py::arg("chain"), "(invariant, n, missing_face)");
    m.def("construct_chain",
          [](const std::vector<std::vector<uint64_t>>& rows) {
              std::vector<FVector> vecs;
              for (const auto& row : rows) vecs.push_back(FVector(row));
              std::vector<Grades> out;
              for (const auto& dl : construct_chain(FVectorChain(std::move(vecs))))
                  out.push_back(from_complex(dl));
              return out;
          },
          py::arg("chain"));
    m.def("stabilization_report",
          [](const std::vector<Grades>& chain) {
              std::vector<SimplicialComplex> complexes;
              for (const auto& g : chain) complexes.push_back(to_complex(g));
              return stabilization_report(complexes);
          },
          py::arg("chain"));

    m.def("enum_families",
          [](int n, int d, uint64_t m) {
              std::vector<Rows> out;
              for_each_family(n, d, m, [&](const Family& f) { out.push_back(from_family(f)); });
              return out;
          },
          py::arg("n"), py::arg("d"), py::arg("m"));
    m.def("verify_min_theorem",
          [](int n, int d, uint64_t m, int jobs, uint64_t cap) {
              return report_dict(verify_min_theorem(n, d, m, jobs, cap));
          },
          py::arg("n"), py::arg("d"), py::arg("m"), py::arg("jobs") = 1, py::arg("cap") = 64);
    m.def("equality_cases",
          [](int n, int d, uint64_t m, int jobs) {
              std::vector<Rows> out;
              for (const Family& f : equality_cases(n, d, m, jobs)) out.push_back(from_family(f));
              return out;
          },
          py::arg("n"), py::arg("d"), py::arg("m"), py::arg("jobs") = 1);
    m.def("verify_identities",
          [](const Rows& f, std::optional<int> d) { return verify_identities(to_family(f, d)); },
          py::arg("family"), py::arg("d") = std::nullopt);
    m.def("search_shift_noninclusion",
          [](int n, int d, uint64_t max_m)
              -> std::optional<std::pair<Rows, int>> {
              auto w = search_shift_noninclusion(n, d, max_m);
              if (!w) return std::nullopt;
              return std::make_pair(from_family(w->family), w->i);
          },
          py::arg("n"), py::arg("d"), py::arg("max_m"));
    m.def("verify_segment_lemmas",
          [](int max_elem, int max_d) {
              SegmentReport r = verify_segment_lemmas(max_elem, max_d);
              py::dict out;
              out["checked"] = r.checked;
              py::list violations;
              for (const DSet& u : r.violations) violations.append(u.elements());
              out["violations"] = violations;
              out["elapsed_seconds"] = r.elapsed_seconds;
              return out;
          },
          py::arg("max_elem"), py::arg("max_d"));

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const closure_violation& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const grade_mismatch& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
}
