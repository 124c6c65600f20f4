#include "polarrec/vectorspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polarrec::vectorspace {

double SparseVector::norm() const {
    double s = 0.0;
    for (const auto& [i, w] : entries) s += w * w;
    return std::sqrt(s);
}

std::uint32_t Vocabulary::index_of(const std::string& trigram) const {
    auto it = forward_.find(trigram);
    return it == forward_.end() ? npos : it->second;
}

std::uint32_t Vocabulary::add(const std::string& trigram) {
    auto [it, inserted] = forward_.emplace(trigram, static_cast<std::uint32_t>(reverse_.size()));
    if (inserted) reverse_.push_back(trigram);
    return it->second;
}

double DfStats::idf(std::uint32_t index) const {
    return std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + static_cast<double>(df[index]))) +
           1.0;
}

VectorSpace build_vocabulary(const std::vector<TrigramCounts>& documents, std::uint32_t min_df) {
    if (documents.empty()) throw std::runtime_error("build_vocabulary: no documents");

    // Presence counts over all trigrams, then admit those meeting min_df.
    // Admission order is sorted trigram text so indices are deterministic
    // regardless of hash-map iteration order.
    std::unordered_map<std::string, std::uint32_t> presence;
    for (const auto& doc : documents) {
        for (const auto& [trigram, count] : doc) presence[trigram] += 1;
    }
    std::vector<const std::pair<const std::string, std::uint32_t>*> admitted;
    admitted.reserve(presence.size());
    for (const auto& kv : presence) {
        if (kv.second >= min_df) admitted.push_back(&kv);
    }
    std::sort(admitted.begin(), admitted.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });

    VectorSpace space;
    space.df.n_docs = documents.size();
    space.df.df.reserve(admitted.size());
    for (const auto* kv : admitted) {
        space.vocab.add(kv->first);
        space.df.df.push_back(kv->second);
    }
    return space;
}

SparseVector tfidf_vector(const TrigramCounts& doc, const VectorSpace& space) {
    SparseVector v;
    v.entries.reserve(doc.size());
    for (const auto& [trigram, count] : doc) {
        const auto idx = space.vocab.index_of(trigram);
        if (idx == Vocabulary::npos) continue;
        v.entries.emplace_back(idx, static_cast<double>(count) * space.df.idf(idx));
    }
    std::sort(v.entries.begin(), v.entries.end());
    const double n = v.norm();
    if (n > 0.0) {
        for (auto& [i, w] : v.entries) w /= n;
    }
    return v;
}

double dot(const SparseVector& a, const SparseVector& b) {
    double s = 0.0;
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (ia != a.entries.end() && ib != b.entries.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

double cosine(const SparseVector& a, const SparseVector& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::clamp(dot(a, b) / (na * nb), 0.0, 1.0);
}

void save_space(const VectorSpace& space, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write index file: " + path);
    out << "polarrec-index v1\t" << space.df.n_docs << '\n';
    for (std::uint32_t i = 0; i < space.vocab.size(); ++i) {
        out << space.vocab.trigram_of(i) << '\t' << i << '\t' << space.df.df[i] << '\n';
    }
}

VectorSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open index file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty index file: " + path);
    std::istringstream header(line);
    std::string magic, version;
    std::uint64_t n_docs = 0;
    header >> magic >> version >> n_docs;
    if (magic != "polarrec-index" || version != "v1") {
        throw std::runtime_error("unrecognized index header in " + path);
    }
    VectorSpace space;
    space.df.n_docs = n_docs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto t1 = line.find('\t');
        const auto t2 = line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos) {
            throw std::runtime_error("malformed index line in " + path);
        }
        const std::string trigram = line.substr(0, t1);
        const auto idx = static_cast<std::uint32_t>(std::stoul(line.substr(t1 + 1, t2 - t1 - 1)));
        const auto df = static_cast<std::uint32_t>(std::stoul(line.substr(t2 + 1)));
        if (space.vocab.add(trigram) != idx) {
            throw std::runtime_error("out-of-order index entry in " + path);
        }
        space.df.df.push_back(df);
    }
    return space;
}

}  // namespace polarrec::vectorspace
