#pragma once

#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 handling: enough to lowercase European scripts, recognise
// punctuation, and split words into graphemes. No normalisation forms.
namespace mlnet::text {

std::vector<char32_t> decode_utf8(std::string_view s);
std::string encode_utf8(char32_t cp);
std::string encode_utf8(const std::vector<char32_t>& cps);

// Simple case folding for Latin, Latin-1, Latin Extended-A, Greek and
// Cyrillic; other code points pass through unchanged.
char32_t to_lower(char32_t cp) noexcept;
std::string to_lower(std::string_view s);

bool is_punctuation(char32_t cp) noexcept;
bool is_space(char32_t cp) noexcept;

// Whitespace split on ASCII and Unicode space separators.
std::vector<std::string> split_whitespace(std::string_view line);

// Drops leading and trailing punctuation. A token made only of punctuation
// comes back empty.
std::string strip_edge_punctuation(std::string_view token);

// Splits a word into graphemes: one code point each, except that entries in
// `multigraphs` (e.g. "lj", "nj", "dž") are matched greedily, longest first.
std::vector<std::string> graphemes(std::string_view word,
                                   const std::vector<std::string>& multigraphs = {});

}  // namespace mlnet::text
