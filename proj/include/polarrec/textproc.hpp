#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace polarrec::textproc {

using TokenSequence = std::vector<std::string>;
using StopwordSet = std::unordered_set<std::string>;

// Lowercases, removes URLs and @-mentions, strips '#' from hashtags.
// Whitespace left over from removals is collapsed later by tokenize.
std::string normalize(const std::string& text);

// Splits on any non-alphanumeric character; drops empty fragments and
// pure-digit tokens. Expects normalized (lowercase) input.
TokenSequence tokenize(const std::string& text);

// Order-preserving removal of tokens contained in the stoplist.
TokenSequence remove_stopwords(const TokenSequence& tokens, const StopwordSet& stoplist);

// Sliding window of 3 consecutive tokens, step 1. Trigrams are the three
// tokens joined by single spaces. Fewer than 3 tokens yields an empty list.
// Callers extract per tweet; trigrams never cross tweet boundaries.
std::vector<std::string> extract_trigrams(const TokenSequence& tokens);

// Full preprocessing for one tweet text: normalize, tokenize, remove
// stopwords, extract trigrams.
std::vector<std::string> text_to_trigrams(const std::string& text, const StopwordSet& stoplist);

// Stopword file: UTF-8, one lowercase word per line, '#'-prefixed comment
// lines ignored.
StopwordSet load_stopwords(const std::string& path);

}  // namespace polarrec::textproc
