#include "cylkit/delta.hpp"

#include <algorithm>

namespace cylkit::delta {

MonotoneMap make_map(int source_rank, int target_rank, std::vector<int> values) {
    if (source_rank < 0 || target_rank < 0)
        throw DeltaError("make_map: negative rank");
    if ((int)values.size() != source_rank + 1)
        throw DeltaError("make_map: expected " + std::to_string(source_rank + 1) +
                         " values, got " + std::to_string(values.size()));
    for (int i = 0; i <= source_rank; ++i) {
        if (values[i] < 0 || values[i] > target_rank)
            throw DeltaError("make_map: value out of range at index " + std::to_string(i));
        if (i > 0 && values[i] < values[i - 1])
            throw DeltaError("make_map: not monotone at index " + std::to_string(i));
    }
    return MonotoneMap{source_rank, target_rank, std::move(values)};
}

MonotoneMap identity(int rank) {
    std::vector<int> v(rank + 1);
    for (int i = 0; i <= rank; ++i) v[i] = i;
    return MonotoneMap{rank, rank, std::move(v)};
}

MonotoneMap face(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw DeltaError("face: bad index");
    std::vector<int> v(n);
    for (int j = 0; j < n; ++j) v[j] = j < i ? j : j + 1;
    return MonotoneMap{n - 1, n, std::move(v)};
}

MonotoneMap degeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw DeltaError("degeneracy: bad index");
    std::vector<int> v(n + 2);
    for (int j = 0; j <= n + 1; ++j) v[j] = j <= i ? j : j - 1;
    return MonotoneMap{n + 1, n, std::move(v)};
}

MonotoneMap vertex(int n, int i) {
    if (i < 0 || i > n) throw DeltaError("vertex: bad index");
    return MonotoneMap{0, n, {i}};
}

MonotoneMap initial_segment(int m, int n) {
    if (m > n || m < 0) throw DeltaError("initial_segment: bad ranks");
    std::vector<int> v(m + 1);
    for (int i = 0; i <= m; ++i) v[i] = i;
    return MonotoneMap{m, n, std::move(v)};
}

MonotoneMap final_segment(int m, int n) {
    if (m > n || m < 0) throw DeltaError("final_segment: bad ranks");
    std::vector<int> v(m + 1);
    for (int i = 0; i <= m; ++i) v[i] = n - m + i;
    return MonotoneMap{m, n, std::move(v)};
}

MonotoneMap subset_inclusion(const std::vector<int>& verts, int n) {
    if (verts.empty()) throw DeltaError("subset_inclusion: empty vertex list");
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] > n)
            throw DeltaError("subset_inclusion: vertex out of range");
        if (i > 0 && verts[i] <= verts[i - 1])
            throw DeltaError("subset_inclusion: vertices not strictly increasing");
    }
    return MonotoneMap{(int)verts.size() - 1, n, verts};
}

bool is_identity(const MonotoneMap& f) {
    if (f.source_rank != f.target_rank) return false;
    for (int i = 0; i <= f.source_rank; ++i)
        if (f.values[i] != i) return false;
    return true;
}

bool is_epi(const MonotoneMap& f) {
    int next = 0;
    for (int v : f.values) {
        if (v == next) ++next;
        else if (v > next) return false;
    }
    return next == f.target_rank + 1;
}

bool is_mono(const MonotoneMap& f) {
    for (int i = 1; i <= f.source_rank; ++i)
        if (f.values[i] <= f.values[i - 1]) return false;
    return true;
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
    if (inner.target_rank != outer.source_rank)
        throw DeltaError("compose: rank mismatch (inner target " +
                         std::to_string(inner.target_rank) + ", outer source " +
                         std::to_string(outer.source_rank) + ")");
    std::vector<int> v(inner.source_rank + 1);
    for (int i = 0; i <= inner.source_rank; ++i) v[i] = outer.values[inner.values[i]];
    return MonotoneMap{inner.source_rank, outer.target_rank, std::move(v)};
}

EpiMonoFactorization epi_mono_factor(const MonotoneMap& f) {
    std::vector<int> image;
    for (int v : f.values)
        if (image.empty() || image.back() != v) image.push_back(v);
    int k = (int)image.size() - 1;
    std::vector<int> ev(f.source_rank + 1);
    int pos = 0;
    for (int i = 0; i <= f.source_rank; ++i) {
        while (image[pos] != f.values[i]) ++pos;
        ev[i] = pos;
    }
    return EpiMonoFactorization{
        MonotoneMap{f.source_rank, k, std::move(ev)},
        MonotoneMap{k, f.target_rank, std::move(image)},
    };
}

std::vector<int> degeneracy_word(const MonotoneMap& epi) {
    if (!is_epi(epi)) throw DeltaError("degeneracy_word: map is not epi");
    // Repeat positions, emitted in decreasing order: the element-operator
    // normal form s_{j0} s_{j1} ... with j0 > j1 > ... .
    std::vector<int> w;
    for (int i = epi.source_rank - 1; i >= 0; --i)
        if (epi.values[i] == epi.values[i + 1]) w.push_back(i);
    return w;
}

std::vector<int> face_word(const MonotoneMap& mono) {
    if (!is_mono(mono)) throw DeltaError("face_word: map is not mono");
    std::vector<int> w;
    int pos = 0;
    for (int v = 0; v <= mono.target_rank; ++v) {
        if (pos <= mono.source_rank && mono.values[pos] == v) ++pos;
        else w.push_back(v);
    }
    return w;
}

MonotoneMap epi_from_word(const std::vector<int>& word, int target_rank) {
    int m = target_rank + (int)word.size();
    std::vector<bool> rep(std::max(m, 0), false);
    int prev = -1;
    for (size_t t = 0; t < word.size(); ++t) {
        int j = word[t];
        if (t > 0 && j >= prev)
            throw DeltaError("epi_from_word: word not strictly decreasing");
        if (j < 0 || j >= m) throw DeltaError("epi_from_word: index out of range");
        prev = j;
        rep[j] = true;
    }
    std::vector<int> v(m + 1);
    v[0] = 0;
    for (int i = 0; i < m; ++i) v[i + 1] = rep[i] ? v[i] : v[i] + 1;
    return MonotoneMap{m, target_rank, std::move(v)};
}

MonotoneMap mono_from_word(const std::vector<int>& word, int target_rank) {
    std::vector<bool> missed(target_rank + 1, false);
    int prev = -1;
    for (size_t t = 0; t < word.size(); ++t) {
        int i = word[t];
        if (t > 0 && i <= prev)
            throw DeltaError("mono_from_word: word not strictly increasing");
        if (i < 0 || i > target_rank) throw DeltaError("mono_from_word: index out of range");
        prev = i;
        missed[i] = true;
    }
    std::vector<int> v;
    for (int i = 0; i <= target_rank; ++i)
        if (!missed[i]) v.push_back(i);
    if (v.empty()) throw DeltaError("mono_from_word: word misses every vertex");
    return MonotoneMap{(int)v.size() - 1, target_rank, std::move(v)};
}

MonotoneMap opposite(const MonotoneMap& f) {
    std::vector<int> v(f.source_rank + 1);
    for (int i = 0; i <= f.source_rank; ++i)
        v[i] = f.target_rank - f.values[f.source_rank - i];
    return MonotoneMap{f.source_rank, f.target_rank, std::move(v)};
}

MonotoneMap join(const MonotoneMap& alpha, const MonotoneMap& beta) {
    std::vector<int> v;
    v.reserve(alpha.source_rank + beta.source_rank + 2);
    for (int x : alpha.values) v.push_back(x);
    for (int x : beta.values) v.push_back(x + alpha.target_rank + 1);
    return MonotoneMap{alpha.source_rank + beta.source_rank + 1,
                       alpha.target_rank + beta.target_rank + 1, std::move(v)};
}

namespace {
void gen_maps(int len, int lo, int hi, std::vector<int>& cur,
              int m, int n, std::vector<MonotoneMap>& out) {
    if (len == 0) {
        out.push_back(MonotoneMap{m, n, cur});
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        gen_maps(len - 1, v, hi, cur, m, n, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<MonotoneMap> all_maps(int m, int n) {
    std::vector<MonotoneMap> out;
    std::vector<int> cur;
    gen_maps(m + 1, 0, n, cur, m, n, out);
    return out;
}

std::vector<MonotoneMap> all_epis(int m, int k) {
    std::vector<MonotoneMap> out;
    for (auto& f : all_maps(m, k))
        if (is_epi(f)) out.push_back(std::move(f));
    return out;
}

std::string to_string(const MonotoneMap& f) {
    std::string s = "[" + std::to_string(f.source_rank) + "]->[" +
                    std::to_string(f.target_rank) + "]:(";
    for (int i = 0; i <= f.source_rank; ++i) {
        if (i) s += ",";
        s += std::to_string(f.values[i]);
    }
    return s + ")";
}

}  // namespace cylkit::delta
