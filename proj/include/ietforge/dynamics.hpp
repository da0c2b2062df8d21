#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ietforge/iet.hpp"
#include "ietforge/interval_set.hpp"

namespace ietforge {

struct Budgets {
    long long idoc_depth = 1000;
    int cycle_max_period = 0;        // 0 = twice the interval count
    int union_max_pieces = 1000;
    long long union_max_steps = 1000;
    long long return_budget = 0;     // 0 = 10^4 * interval count
    long long birkhoff_float_threshold = 1000000;
};

/// A collision between discontinuity orbits: T^l(a_i) = a_j (periodic when
/// i == j). Indices are 1-based over a_1..a_{m-1}. Witnesses re-verify by
/// direct iteration from scratch.
struct IdocWitness {
    int i = 0, j = 0;
    long long l = 0;
    QAlpha value;
    bool periodic = false;
};

struct DriftCheck {
    int i = 0, j = 0;      // candidate collision T^l(a_i) = a_j
    long long l = 0;
    QAlpha reached;        // T^l(a_i), exact
    bool collided = false;
};

/// Algebraic orbit-separation certificate. When every translation carries
/// the same nonzero alpha-coefficient c, the alpha-coefficient of T^l(x)
/// is x.p + l*c, so a collision T^l(a_i) = a_j forces
/// l = (a_j.p - a_i.p) / c. Only finitely many candidates remain and each
/// is settled by direct exact iteration; periodicity needs l*c = 0 and is
/// impossible outright.
struct DriftCertificate {
    Rational alpha_coefficient;      // the common c != 0
    std::vector<DriftCheck> checks;  // the residual candidates, all settled
    bool certified = false;
    std::optional<IdocWitness> refutation;  // a candidate that really collides
};

/// nullopt when the translations do not share one alpha-coefficient (the
/// machinery does not apply); IrrationalityUnknown when alpha itself is not
/// certified irrational.
std::optional<DriftCertificate> drift_certificate(const Iet& T);

struct IdocVerdict {
    enum class Status { PassToDepth, Certified, Fail };
    Status status = Status::PassToDepth;
    long long depth = 0;
    std::optional<IdocWitness> witness;
    std::optional<DriftCertificate> certificate;
};

/// Finite-depth orbit scan of every discontinuity with an exact-value
/// dictionary. Can only refute; a clean scan is evidence, never a proof
/// (certificates come from drift_certificate).
IdocVerdict idoc_check(const Iet& T, long long depth);

struct InvariantUnion {
    IntervalSet set;
    int seed_index = 0;      // 1-based interval of T whose closure this is
    long long steps = 0;
};

struct UnionSearchOutcome {
    std::optional<InvariantUnion> found;  // proper invariant union, exact
    bool budget_exhausted = false;        // some seed ran out of budget
};

/// Grows U := U union T(U) from each partition interval until the union is
/// exactly closed. A closure equal to the whole domain is discarded (it
/// witnesses nothing); the first proper closed union is returned.
UnionSearchOutcome invariant_union_search(const Iet& T, int max_pieces, long long max_steps);

struct ReturnBranch {
    QAlpha lo, hi;        // subinterval of the base, absolute coordinates
    QAlpha translation;   // first-return displacement
    long long return_time = 0;
};

class NoReturnError : public Error {
public:
    NoReturnError(QAlpha lo, QAlpha hi, long long budget)
        : Error(ErrorCode::NoReturnWithinBudget,
                "[" + lo.str() + ", " + hi.str() + ") did not return within " +
                    std::to_string(budget) + " steps"),
          lo_(std::move(lo)), hi_(std::move(hi)) {}
    const QAlpha& lo() const { return lo_; }
    const QAlpha& hi() const { return hi_; }

private:
    QAlpha lo_, hi_;
};

struct ReturnSystem {
    QAlpha base_lo, base_hi;
    std::vector<ReturnBranch> branches;     // sorted, tile the base exactly
    Iet induced;                            // the first-return map on [0, hi-lo)
    std::vector<long long> return_times;    // per induced branch, same order
};

/// First-return map of T on [u, v): the base is split into maximal
/// subintervals with a constant return itinerary by following forward
/// images with exact splitting. Throws NoReturnError when a subinterval
/// exceeds the step budget without coming back.
ReturnSystem first_return(const Iet& T, const QAlpha& u, const QAlpha& v,
                          long long budget = 0);

struct BirkhoffCell {
    QAlpha lo, hi;
    long long visits = 0;
    double frequency = 0, lebesgue = 0, deviation = 0;
};

struct BirkhoffStats {
    QAlpha start;
    long long steps = 0;
    bool exact = true;  // false: double positions with compensated updates
    std::vector<BirkhoffCell> cells;
    double max_deviation = 0, mean_deviation = 0;
};

BirkhoffStats birkhoff_discrepancy(const Iet& T, const QAlpha& start, long long steps,
                                   std::span<const IntervalSet::Piece> cells,
                                   long long float_threshold = 1000000);

struct MinimalityReport {
    enum class Verdict { MinimalCertified, MinimalEvidence, NonMinimal, Unknown };
    Verdict verdict = Verdict::Unknown;
    bool irreducible = false;
    IdocVerdict idoc;
    UnionSearchOutcome unions;
    std::optional<IntervalSet> witness;  // invariant union for NonMinimal
    // set when minimality is certified over a certified-irrational rank-2
    // session: unique ergodicity follows from cited external theorems
    // (Keane's minimality criterion, Boshernitzan's rank-2 theorem) applied
    // to machine-checked hypotheses
    bool uniquely_ergodic_by_cited_theorems = false;
    std::vector<std::string> notes;
};

MinimalityReport minimality_report(const Iet& T, const Budgets& budgets = {});

}  // namespace ietforge
