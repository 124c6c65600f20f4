#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace polarrec::vectorspace {

// Trigram multiset as trigram -> raw count.
using TrigramCounts = std::unordered_map<std::string, std::uint32_t>;

struct SparseVector {
    // Sorted by index, strictly increasing; no zero-weight entries.
    std::vector<std::pair<std::uint32_t, double>> entries;

    bool empty() const { return entries.empty(); }
    double norm() const;

    bool operator==(const SparseVector&) const = default;
};

class Vocabulary {
public:
    // Returns the index, or npos if absent.
    static constexpr std::uint32_t npos = UINT32_MAX;
    std::uint32_t index_of(const std::string& trigram) const;
    const std::string& trigram_of(std::uint32_t index) const { return reverse_.at(index); }
    std::size_t size() const { return reverse_.size(); }

    std::uint32_t add(const std::string& trigram);

private:
    std::unordered_map<std::string, std::uint32_t> forward_;
    std::vector<std::string> reverse_;
};

struct DfStats {
    std::vector<std::uint32_t> df;  // indexed by vocabulary index
    std::uint64_t n_docs = 0;

    // Smoothed idf: ln((1 + n_docs) / (1 + df)) + 1.
    double idf(std::uint32_t index) const;
};

struct VectorSpace {
    Vocabulary vocab;
    DfStats df;
};

// Vocabulary over every trigram occurring in >= min_df documents; df counts
// presence, not multiplicity. Documents iterated in the given order so
// indices are deterministic.
VectorSpace build_vocabulary(const std::vector<TrigramCounts>& documents,
                             std::uint32_t min_df = 1);

// weight(t) = tf(t) * idf(t) for in-vocabulary trigrams, L2-normalized to
// unit length; zero vector stays zero; out-of-vocabulary trigrams ignored.
SparseVector tfidf_vector(const TrigramCounts& doc, const VectorSpace& space);

double dot(const SparseVector& a, const SparseVector& b);

// dot(a,b) / (|a|*|b|), 0 if either vector is zero; clamped to [0,1].
double cosine(const SparseVector& a, const SparseVector& b);

// Index dump: versioned header line, then one "trigram\tindex\tdf" per line.
void save_space(const VectorSpace& space, const std::string& path);
VectorSpace load_space(const std::string& path);

}  // namespace polarrec::vectorspace
