#include "inckk/simplicial.hpp"

#include <algorithm>

#include "inckk/compression.hpp"
#include "inckk/inc.hpp"

namespace inckk {

closure_violation::closure_violation(DSet face)
    : std::runtime_error("not a simplicial complex: missing face (" + face.to_string() + ")"),
      face_(std::move(face)) {}

SimplicialComplex SimplicialComplex::from_grades(std::map<int, Family> grades) {
    for (auto it = grades.begin(); it != grades.end();) {
        if (it->first < 1) throw std::invalid_argument("complex grades start at 1");
        if (it->second.d() != it->first)
            throw grade_mismatch("grade key does not match member cardinality");
        it = it->second.empty() ? grades.erase(it) : std::next(it);
    }
    for (const auto& [d, fam] : grades) {
        if (d == 1) continue;
        Family boundary = shadow(fam);
        auto below = grades.find(d - 1);
        for (const DSet& face : boundary) {
            if (below == grades.end() || !below->second.contains(face))
                throw closure_violation(face);
        }
    }
    SimplicialComplex dl;
    dl.grades_ = std::move(grades);
    return dl;
}

const Family* SimplicialComplex::grade(int d) const {
    auto it = grades_.find(d);
    return it == grades_.end() ? nullptr : &it->second;
}

bool SimplicialComplex::contains(const DSet& face) const {
    const Family* fam = grade(face.size());
    return fam != nullptr && fam->contains(face);
}

FVector SimplicialComplex::f_vector() const {
    std::vector<uint64_t> entries(static_cast<size_t>(max_grade()), 0);
    for (const auto& [d, fam] : grades_) entries[static_cast<size_t>(d - 1)] = fam.size();
    return FVector(std::move(entries));
}

namespace {

SimplicialComplex map_grades(const SimplicialComplex& dl, Family (*op)(const Family&)) {
    std::map<int, Family> out;
    for (const auto& [d, fam] : dl.grades()) out.emplace(d, op(fam));
    return SimplicialComplex::from_grades(std::move(out));
}

Family inc_family_op(const Family& f) { return inc_image(f); }

}  // namespace

SimplicialComplex inc_complex(const SimplicialComplex& dl) {
    return map_grades(dl, &inc_family_op);
}

SimplicialComplex compress_complex(const SimplicialComplex& dl) {
    return map_grades(dl, &compress);
}

std::map<int, Family> non_faces(const SimplicialComplex& dl, int n) {
    if (n < 1) throw std::invalid_argument("ambient vertex count must be >= 1");
    for (const auto& [d, fam] : dl.grades()) {
        if (!fam.empty() && fam.largest().largest() > n)
            throw std::invalid_argument("complex has a face outside the ambient vertex set");
    }
    std::map<int, Family> out;
    for (int d = 1; d <= n; ++d) {
        const Family* present = dl.grade(d);
        std::vector<DSet> missing;
        // d-subsets of [n] are exactly the initial segment of length C(n,d).
        Family all =
            compressed_family(binom_checked(static_cast<uint64_t>(n), static_cast<uint64_t>(d)), d);
        for (const DSet& u : all) {
            if (present == nullptr || !present->contains(u)) missing.push_back(u);
        }
        if (!missing.empty()) out.emplace(d, Family(d, std::move(missing)));
    }
    return out;
}

std::optional<ChainFaceViolation> check_chain(std::span<const SimplicialComplex> chain) {
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        SimplicialComplex img = inc_complex(chain[i]);
        for (const auto& [d, fam] : img.grades()) {
            const Family* target = chain[i + 1].grade(d);
            for (const DSet& face : fam) {
                if (target == nullptr || !target->contains(face))
                    return ChainFaceViolation{i + 1, face};
            }
        }
    }
    return std::nullopt;
}

std::vector<SimplicialComplex> construct_chain(const FVectorChain& chain) {
    if (auto v = chain_violation(chain)) {
        std::string which = v->which == ChainInequality::shadow ? "shadow" : "growth";
        throw std::invalid_argument("infeasible chain: " + which + " inequality fails at n=" +
                                    std::to_string(v->n) + ", d=" + std::to_string(v->d));
    }
    std::vector<SimplicialComplex> out;
    out.reserve(chain.length());
    for (const FVector& f : chain.vectors()) {
        std::map<int, Family> grades;
        for (size_t j = 0; j < f.support(); ++j) {
            int d = static_cast<int>(j) + 1;
            if (f.at(j) > 0) grades.emplace(d, compressed_family(f.at(j), d));
        }
        out.push_back(SimplicialComplex::from_grades(std::move(grades)));
    }
    return out;
}

std::vector<bool> stabilization_report(std::span<const SimplicialComplex> chain) {
    if (auto v = check_chain(chain))
        throw std::invalid_argument("chain is not Inc-invariant: face (" + v->face.to_string() +
                                    ") missing from complex " + std::to_string(v->n + 1));
    std::vector<bool> flags;
    flags.reserve(chain.size() > 0 ? chain.size() - 1 : 0);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        flags.push_back(inc_complex(chain[i]) == chain[i + 1]);
    return flags;
}

}  // namespace inckk
