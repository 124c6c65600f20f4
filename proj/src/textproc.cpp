#include "polarrec/textproc.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace polarrec::textproc {

namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool is_alnum(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

// True if s starting at i begins a URL (http://, https:// or www.).
bool starts_url(const std::string& s, std::size_t i) {
    static const std::string kHttp = "http://";
    static const std::string kHttps = "https://";
    static const std::string kWww = "www.";
    auto match = [&](const std::string& p) {
        if (i + p.size() > s.size()) return false;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (std::tolower(static_cast<unsigned char>(s[i + j])) != p[j]) return false;
        }
        return true;
    };
    return match(kHttp) || match(kHttps) || match(kWww);
}

}  // namespace

std::string normalize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (starts_url(text, i)) {
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            continue;
        }
        if (c == '@') {
            // Mention: '@' run plus the following word; eat one preceding space.
            if (!out.empty() && out.back() == ' ') out.pop_back();
            while (i < text.size() && text[i] == '@') ++i;
            while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i]))) ++i;
            continue;
        }
        if (c == '#') {
            ++i;  // keep the tag word, drop the marker
            continue;
        }
        out.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
        ++i;
    }
    return out;
}

TokenSequence tokenize(const std::string& text) {
    TokenSequence tokens;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        bool all_digits = true;
        for (unsigned char c : cur) {
            if (!std::isdigit(c)) {
                all_digits = false;
                break;
            }
        }
        if (!all_digits) tokens.push_back(cur);
        cur.clear();
    };
    for (unsigned char c : text) {
        if (is_alnum(c)) {
            cur.push_back(static_cast<char>(c));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

TokenSequence remove_stopwords(const TokenSequence& tokens, const StopwordSet& stoplist) {
    TokenSequence out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (!stoplist.count(t)) out.push_back(t);
    }
    return out;
}

std::vector<std::string> extract_trigrams(const TokenSequence& tokens) {
    std::vector<std::string> out;
    if (tokens.size() < 3) return out;
    out.reserve(tokens.size() - 2);
    for (std::size_t i = 0; i + 2 < tokens.size(); ++i) {
        out.push_back(tokens[i] + ' ' + tokens[i + 1] + ' ' + tokens[i + 2]);
    }
    return out;
}

std::vector<std::string> text_to_trigrams(const std::string& text, const StopwordSet& stoplist) {
    return extract_trigrams(remove_stopwords(tokenize(normalize(text)), stoplist));
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(line);
    }
    return words;
}

}  // namespace polarrec::textproc
