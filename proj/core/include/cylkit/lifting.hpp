#pragma once

// The lifting engine: exact decision of individual lifting squares, bounded
// right-lifting-property checks against generator families, finite-stage
// small-object-argument factorization, and retract-based certification of
// inner anodyne maps and absolute weak categorical equivalences.
//
// Everything here is deterministic: candidates are tried in canonical simplex
// order, so identical inputs and budgets yield identical outputs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/search.hpp"
#include "cylkit/sset.hpp"
#include "cylkit/verdict.hpp"

namespace cylkit {

// ---------------------------------------------------------------------------
// Generator families

enum class Family {
    inner_horns,   // Λᵏ[n] -> Δ[n],  n ≥ 2,  0 < k < n
    left_horns,    // n ≥ 1,  0 ≤ k < n
    right_horns,   // n ≥ 1,  0 < k ≤ n
    all_horns,     // n ≥ 1,  0 ≤ k ≤ n
    boundaries,    // ∂Δ[n] -> Δ[n],  n ≥ 0
    explicit_list,
};

const char* to_string(Family f);

struct FamilySpec {
    Family kind = Family::inner_horns;
    std::vector<SimplicialMap> members;  // explicit_list only; every member mono

    static FamilySpec inner() { return {Family::inner_horns, {}}; }
    static FamilySpec left() { return {Family::left_horns, {}}; }
    static FamilySpec right() { return {Family::right_horns, {}}; }
    static FamilySpec all() { return {Family::all_horns, {}}; }
    static FamilySpec boundary() { return {Family::boundaries, {}}; }
    static FamilySpec explicit_members(std::vector<SimplicialMap> ms) {
        return {Family::explicit_list, std::move(ms)};
    }
};

// Identifies one family member: horn(n, k); boundary(n) as k = -1; explicit
// member index n as k = -2.
struct CellDesc {
    int n = 0;
    int k = 0;
    std::string label() const;
};

struct FamilyMember {
    CellDesc desc;
    SimplicialMap incl;
};

// Members whose codomain has dimension ≤ max_dim, in canonical order
// (dimension ascending, horn index ascending; explicit members as listed).
std::vector<FamilyMember> family_members(const FamilySpec& family, int max_dim);

// ---------------------------------------------------------------------------
// Lifting squares

struct LiftingProblem {
    SimplicialMap left;    // i : A -> B, mono
    SimplicialMap right;   // p : X -> Y
    SimplicialMap top;     // A -> X
    SimplicialMap bottom;  // B -> Y
};

// Validates p∘top = bottom∘i and that the left leg is mono.
LiftingProblem make_lifting_problem(SimplicialMap left, SimplicialMap right,
                                    SimplicialMap top, SimplicialMap bottom);

struct LiftResult {
    Verdict verdict;  // YES_CERTIFIED with diagonal, or NO (exact: both legs finite)
    std::optional<SimplicialMap> diagonal;
    std::uint64_t solutions = 0;  // exact count when count_all was requested
};

// Exact decision by exhaustive backtracking over the images of generators of
// B outside A, dimension-increasing, faces propagated.  The first solution in
// canonical order is returned; count_all additionally counts every diagonal.
LiftResult solve_lift(const LiftingProblem& problem, bool count_all = false);

// ---------------------------------------------------------------------------
// Bounded right lifting property

struct RlpResult {
    Verdict verdict;
    std::optional<LiftingProblem> counterexample;  // on NO
};

// Solves every square with a family member of dimension ≤ max_dim on the
// left.  NO is final (a genuine counterexample); YES is bounded by max_dim,
// upgraded to YES_CERTIFIED when a structural certificate applies (identity,
// or a complete-nerve map against inner horns).
RlpResult has_rlp(const SimplicialMap& p, const FamilySpec& family,
                  const RunConfig& config = {});

// ---------------------------------------------------------------------------
// Small object argument (finite stages)

struct AttachedCell {
    CellDesc desc;
    SimplicialMap top;     // member domain -> middle at the stage it was attached
    SimplicialMap bottom;  // member codomain -> Y
};

struct SoaStage {
    std::vector<AttachedCell> cells;
    SSetPtr middle_after;
};

struct CellComplexFactorization {
    SimplicialMap input;  // u : A -> Y
    FamilySpec family;
    SSetPtr middle;
    SimplicialMap left_part;   // A -> middle; relative cell complex, always mono
    SimplicialMap right_part;  // middle -> Y
    std::vector<SoaStage> stages;
    // yes_bounded: no unsolved square with left leg in the family within
    // dim_budget remained at termination; exhausted: stage budget ran out.
    Verdict status;
    int dim_budget = 0;
    int stage_budget = 0;
};

// u = right_part ∘ left_part.  Each stage collects every unsolved square in
// canonical order and attaches all of them at once through a single coproduct
// and pushout.  Defaults: dim_budget = max(dimension of the two ends) + 2,
// stage_budget = 3.
CellComplexFactorization soa_factor(const SimplicialMap& u, const FamilySpec& family,
                                    const RunConfig& config = {});

// Replays the recorded cells stage by stage and checks that they rebuild
// `middle` exactly and that right_part ∘ left_part = input.
bool audit_factorization(const CellComplexFactorization& fact);

// ---------------------------------------------------------------------------
// Refutation library

// A certified inner fibration used to produce genuine NO verdicts.  An entry
// built from a truncated nerve is only quotable against maps whose codomain
// dimension is at most valid_up_to: up to that bound its lifting squares
// agree with those of the untruncated nerve.
struct LibraryFibration {
    std::string name;
    SimplicialMap map;
    int valid_up_to = -1;  // -1: all dimensions
};

struct FibrationLibrary {
    std::vector<LibraryFibration> entries;
    void add(std::string name, SimplicialMap map, int valid_up_to = -1);
};

// Terminal nerve maps of small discrete categories and posets, plus the
// truncated interval groupoid nerve.  Every entry's lifting behaviour is
// known, so failures against them are genuine refutations.
FibrationLibrary default_refutation_library(int truncation = 3);

struct Refutation {
    std::string fibration;  // library entry name
    LiftingProblem square;  // unsolvable square with u on the left
};

// First square (library order, then canonical square order) that u fails to
// lift against.  Requires u mono.
std::optional<Refutation> find_refutation(const SimplicialMap& u,
                                          const FibrationLibrary& lib);

// ---------------------------------------------------------------------------
// Inner anodyne certification

// Exhibits u as a retract of the cell-complex part of its factorization:
//   section ∘ u = left_part,   retraction ∘ section = identity,
//   retraction ∘ left_part = u.
struct RetractCertificate {
    SimplicialMap section;     // B -> middle
    SimplicialMap retraction;  // middle -> B (the factorization's right part)
};

bool check_retract_certificate(const RetractCertificate& cert, const SimplicialMap& u,
                               const SimplicialMap& left_part);

struct AnodyneCertification {
    Verdict verdict;
    std::optional<Refutation> refutation;               // on NO
    std::optional<CellComplexFactorization> factorization;
    std::optional<Verdict> right_part_tf;               // recorded sub-verdict
    std::optional<RetractCertificate> certificate;      // on YES_CERTIFIED
};

// Pipeline: library refutation (genuine NO) — small-object factorization over
// inner horns — retract square.  A YES_CERTIFIED here is sound at all
// dimensions: a retract of a relative inner-horn cell complex is inner
// anodyne regardless of any budget.  Otherwise EXHAUSTED.
AnodyneCertification certify_inner_anodyne(const SimplicialMap& u,
                                           const RunConfig& config = {},
                                           const FibrationLibrary* extra = nullptr);

// ---------------------------------------------------------------------------
// Absolute weak categorical equivalences

struct AwceResult {
    Verdict verdict;
    std::optional<std::string> missed_vertex;       // non-surjectivity witness
    std::optional<Refutation> refutation;           // mono route
    std::optional<CellComplexFactorization> factorization;
    std::optional<Verdict> right_part_tf;
    std::optional<RetractCertificate> certificate;  // mono route
};

// NO routes: a codomain vertex outside the image (absolute weak categorical
// equivalences are surjective on 0-simplices), or, for monos, a refutation of
// inner-anodyne-ness (for monos the two classes coincide).  YES routes: mono
// certified inner anodyne (certified), or inner-horn factorization whose
// right part passes the bounded trivial-fibration check (bounded).
AwceResult is_absolute_wce(const SimplicialMap& u, const RunConfig& config = {},
                           const FibrationLibrary* extra = nullptr);

// ---------------------------------------------------------------------------
// Right cancellation

struct CancellationReport {
    AnodyneCertification u_cert;   // u
    AnodyneCertification vu_cert;  // v ∘ u
    AnodyneCertification v_cert;   // v — the headline verdict
    // u and v∘u certified but v refuted: impossible if the engine is sound,
    // so tests treat this flag as a bug trap.
    bool contradiction = false;
};

// Certifies u and v∘u, then attempts v.  Both must be mono and composable.
CancellationReport right_cancellation_check(const SimplicialMap& u,
                                            const SimplicialMap& v,
                                            const RunConfig& config = {});

}  // namespace cylkit
