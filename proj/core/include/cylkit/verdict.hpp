#pragma once

// Four-valued verdicts for the lifting engine and everything built on it.
//
// The engine never coerces a verdict to a boolean: trivial-fibration-hood and
// inner-anodyne-ness are only semidecidable at this representation, so the
// honest outcomes are "certified yes", "yes up to a stated bound", "no with a
// concrete witness", and "ran out of budget".

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cylkit {

enum class Status {
    yes_certified,  // carries a replayable certificate; sound at all dimensions
    yes_bounded,    // exhaustively verified up to the reported cutoff dimension
    no,             // carries a concrete counterexample
    exhausted,      // budgets ran out before a decision
};

inline const char* to_string(Status s) {
    switch (s) {
        case Status::yes_certified: return "YES_CERTIFIED";
        case Status::yes_bounded: return "YES_BOUNDED";
        case Status::no: return "NO";
        case Status::exhausted: return "EXHAUSTED";
    }
    return "?";
}

inline bool is_yes(Status s) {
    return s == Status::yes_certified || s == Status::yes_bounded;
}

// Outcome of one check.  Witness payloads (diagonals, counterexample squares,
// certificates) live in the result struct of the operation that produced the
// verdict; `detail` is the human-readable account of what was found.
struct Verdict {
    Status status = Status::exhausted;
    std::optional<int> cutoff;  // dimension bound a bounded/exhausted verdict is relative to
    std::string detail;
    std::uint64_t nodes = 0;    // backtracking nodes visited
    std::uint64_t squares = 0;  // lifting squares examined

    bool yes() const { return is_yes(status); }
};

inline Verdict certified(std::string detail) {
    return Verdict{Status::yes_certified, std::nullopt, std::move(detail), 0, 0};
}

inline Verdict bounded_yes(int cutoff, std::string detail) {
    return Verdict{Status::yes_bounded, cutoff, std::move(detail), 0, 0};
}

inline Verdict refuted(std::string detail) {
    return Verdict{Status::no, std::nullopt, std::move(detail), 0, 0};
}

inline Verdict exhausted(std::string detail) {
    return Verdict{Status::exhausted, std::nullopt, std::move(detail), 0, 0};
}

// Weakest-loses ordering for combining verdicts:
// NO < EXHAUSTED < YES_BOUNDED < YES_CERTIFIED.
inline int verdict_strength(Status s) {
    switch (s) {
        case Status::no: return 0;
        case Status::exhausted: return 1;
        case Status::yes_bounded: return 2;
        case Status::yes_certified: return 3;
    }
    return 1;
}

// Meet under the weakest-loses order.  Cutoffs combine by minimum so an
// aggregate never overstates its verified range; node and square counts
// accumulate.
inline void meet_into(Verdict& acc, const Verdict& v) {
    acc.nodes += v.nodes;
    acc.squares += v.squares;
    if (verdict_strength(v.status) < verdict_strength(acc.status)) {
        acc.status = v.status;
        acc.detail = v.detail;
    }
    if (v.cutoff && (!acc.cutoff || *v.cutoff < *acc.cutoff)) acc.cutoff = v.cutoff;
}

// Meet of a keyed list, tagging each entry's detail with its key so the
// weakest entry names its culprit.
inline Verdict aggregate_verdicts(const std::vector<std::pair<std::string, Verdict>>& items,
                                  const std::string& empty_detail,
                                  const std::string& pass_detail) {
    Verdict agg = certified(pass_detail);
    for (const auto& [key, v] : items) {
        Verdict tagged = v;
        tagged.detail = key + ": " + v.detail;
        meet_into(agg, tagged);
    }
    if (items.empty()) agg.detail = empty_detail;
    return agg;
}

// Agreement means no yes/no contradiction; EXHAUSTED entries abstain.
inline bool verdicts_agree(std::initializer_list<Status> sts) {
    bool any_yes = false, any_no = false;
    for (Status s : sts) {
        if (s == Status::no) any_no = true;
        if (is_yes(s)) any_yes = true;
    }
    return !(any_yes && any_no);
}

// Shared knobs for bounded checks.  max_dim = 0 means "auto": each operation
// substitutes max(dimension of the objects in play) + 2.
struct RunConfig {
    int max_dim = 0;
    int stage_budget = 3;    // small-object-argument stages
    int truncation = 3;      // nerve truncation used for interval-like witnesses
    std::uint64_t seed = 0;  // corpus generation only; checks themselves are deterministic

    int resolve_max_dim(int ambient_dim) const {
        return max_dim > 0 ? max_dim : ambient_dim + 2;
    }
};

}  // namespace cylkit
