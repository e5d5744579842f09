#pragma once

#include <utility>
#include <vector>

#include "pedlab/shapes.hpp"
#include "pedlab/tableaux.hpp"

namespace pedlab {

/// One-line notation for a bijection of [1..n].
struct Permutation {
    std::vector<int> word;

    Permutation() = default;
    explicit Permutation(std::vector<int> w);  // validates

    int size() const { return static_cast<int>(word.size()); }
    Permutation reversed() const;

    bool operator==(const Permutation&) const = default;
};

/// Row insertion. Returns the insertion tableau and the recording tableau,
/// both standard of the same straight shape.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& sigma);

/// The unique permutation mapping to (P, Q) under row insertion, by reverse
/// bumping driven by the recording tableau's entries n..1.
Permutation rsk_inverse(const StandardTableau& p, const StandardTableau& q);

/// Entry at (i,j) moves to (j,i) of the conjugate shape.
StandardTableau transpose(const StandardTableau& q);

/// Shape-preserving involution: invert row insertion against an auxiliary
/// tableau, reverse the permutation, reinsert, transpose the recording
/// tableau. The result does not depend on the auxiliary tableau.
StandardTableau schuetzenberger(const StandardTableau& q);
StandardTableau schuetzenberger(const StandardTableau& q, const StandardTableau& aux);

/// True iff maj(Q) equals the plinth volume of schuetzenberger(Q) for every
/// standard tableau of the straight shape s.
bool verify_mahonian_schuetzenberger(const SkewShape& s);

}  // namespace pedlab
