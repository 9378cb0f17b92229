#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "inckk/numeric.hpp"

// Simplicial complexes stored gradewise as families of d-sets (d >= 1, the
// empty face implicit), their Inc-images and compressions, non-faces, and
// validation/construction of chains of complexes.

namespace inckk {

/// Thrown when a graded collection is not closed under inclusion; carries the
/// smallest missing face.
class closure_violation : public std::runtime_error {
public:
    explicit closure_violation(DSet face);
    const DSet& missing_face() const { return face_; }

private:
    DSet face_;
};

class SimplicialComplex {
public:
    /// The empty complex (just the implicit empty face).
    SimplicialComplex() = default;

    /// Validates inclusion-closure; throws closure_violation naming the
    /// smallest missing face otherwise. Empty grades are dropped.
    static SimplicialComplex from_grades(std::map<int, Family> grades);

    /// Faces of cardinality d; nullptr if the grade is empty.
    const Family* grade(int d) const;
    const std::map<int, Family>& grades() const { return grades_; }
    int max_grade() const { return grades_.empty() ? 0 : grades_.rbegin()->first; }
    bool empty() const { return grades_.empty(); }
    bool contains(const DSet& face) const;

    FVector f_vector() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::map<int, Family> grades_;
};

/// Gradewise Inc-image; the result is again a complex.
SimplicialComplex inc_complex(const SimplicialComplex& dl);

/// Gradewise compression; the result is again a complex.
SimplicialComplex compress_complex(const SimplicialComplex& dl);

/// For each d in 1..n, the d-subsets of [n] that are not faces; empty grades
/// omitted. Every face of dl must lie inside [n].
std::map<int, Family> non_faces(const SimplicialComplex& dl, int n);

struct ChainFaceViolation {
    size_t n;  // 1-based index of the complex whose Inc-image escapes
    DSet face;
};

/// Checks Inc(complex_n) within complex_{n+1} for every consecutive pair;
/// returns the first missing face scanning n, then grade, then squashed order.
std::optional<ChainFaceViolation> check_chain(std::span<const SimplicialComplex> chain);

/// Realizes a feasible face-count chain by gradewise-compressed complexes.
/// Throws std::invalid_argument echoing the chain violation otherwise.
std::vector<SimplicialComplex> construct_chain(const FVectorChain& chain);

/// For each n < N, whether Inc(complex_n) equals complex_{n+1} exactly.
/// Requires check_chain to pass; throws std::invalid_argument otherwise.
std::vector<bool> stabilization_report(std::span<const SimplicialComplex> chain);

}  // namespace inckk
