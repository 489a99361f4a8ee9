#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3sec/errors.hpp"
#include "k3sec/numeric.hpp"
#include "k3sec/partition.hpp"

namespace k3sec {

// The Grassmannian G(ell, n) of projective ell-planes in P^n, i.e. of
// (ell+1)-dimensional subspaces of an (n+1)-dimensional vector space.
// A partition indexes a Schubert class iff it fits the rows() x cols() box.
class Grassmannian {
public:
    Grassmannian(int ell, int n);

    int ell() const { return ell_; }
    int n() const { return n_; }
    int rows() const { return ell_ + 1; }
    int cols() const { return n_ - ell_; }
    long dim() const { return static_cast<long>(rows()) * cols(); }

    bool admissible(const Partition& p) const;
    void require_admissible(const Partition& p) const;  // InadmissiblePartition

    std::string to_string() const;  // "G(1,5)"

    bool operator==(const Grassmannian& rhs) const = default;

private:
    int ell_;
    int n_;
};

// Homogeneous integer-linear combination of Schubert classes of a single
// codimension. Keys are stored zero-padded to exactly rows() parts and in
// decreasing lexicographic order; zero coefficients are never stored, so the
// zero class of any codimension has an empty term map.
class CohClass {
public:
    using TermMap = std::map<Partition, Int, std::greater<Partition>>;

    CohClass(Grassmannian ctx, long codim, TermMap terms);

    const Grassmannian& ctx() const { return ctx_; }
    long codim() const { return codim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Partition& p) const;  // 0 when absent

    // "4*sigma[4,0] + 16*sigma[3,1]"; the zero class prints "0".
    std::string to_string() const;

    bool operator==(const CohClass& rhs) const = default;

private:
    Grassmannian ctx_;
    long codim_;
    TermMap terms_;
};

// Normalizing constructor: pads keys, drops zero coefficients, merges
// duplicates. All partitions must be admissible and of equal weight.
CohClass make_class(const Grassmannian& ctx,
                    const std::vector<std::pair<Partition, Int>>& terms);

CohClass zero_class(const Grassmannian& ctx, long codim);
CohClass schubert_class(const Grassmannian& ctx, const Partition& lambda);
CohClass fundamental_class(const Grassmannian& ctx);  // sigma_0
CohClass point_class(const Grassmannian& ctx);        // full box

// Poincare-dual partition in the box: hat(l)[i] = cols - l[rows-1-i].
// An involution; weight(hat(l)) = dim - weight(l).
Partition complement(const Partition& lambda, const Grassmannian& ctx);

// Multiplication by the special class sigma_p = sigma_{p,0,...}: each term
// grows by a horizontal strip of p boxes, results outside the box vanish.
CohClass pieri(const CohClass& c, int p);

// General product via Littlewood-Richardson tableau counting, truncated to
// the box. Agrees with iterated pieri() on sigma_p factors.
CohClass multiply(const CohClass& a, const CohClass& b);

// Intersection pairing of classes of complementary codimension; equals the
// point-class coefficient of multiply(a, b).
Int pairing(const CohClass& a, const CohClass& b);

// Degree of the cycle under the Pluecker embedding: pairing against
// sigma_1^d with d = dim - codim, the power built by iterated pieri().
Int plucker_degree(const CohClass& c);

// c^nu_{lambda,mu}: number of Littlewood-Richardson skew tableaux of shape
// nu/lambda and content mu, counted by backtracking.
Int lr_coefficient(const Partition& nu, const Partition& lambda,
                   const Partition& mu);

// All partitions of the given weight inside a rows x cols box.
std::vector<Partition> partitions_in_box(int rows, int cols, long weight);

}  // namespace k3sec
