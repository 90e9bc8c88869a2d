#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semsketch {

// All character offsets in this project are Unicode scalar-value offsets
// into UTF-8 text, half-open [start, end). Byte-wise comparison of valid
// UTF-8 strings orders them by codepoint, so std::string's operator< is
// the codepoint-ascending tie-break used throughout.

std::size_t utf8_length(std::string_view s);

// Substring by codepoint offsets [from, to). Offsets past the end clamp.
std::string utf8_substr(std::string_view s, std::size_t from, std::size_t to);

// Which token of a space-joined phrase is its head.
enum class HeadRule { LastToken, FirstToken };

// Head lemma of a possibly multiword filler ("на заря" -> "заря").
std::string head_lemma(std::string_view phrase, HeadRule rule = HeadRule::LastToken);

// Split on ASCII whitespace, dropping empty tokens.
std::vector<std::string> whitespace_tokens(std::string_view s);

// Strip surrounding punctuation (ASCII set plus « » quotes and dashes).
std::string strip_punctuation(std::string_view token);

bool contains_whitespace(std::string_view s);

std::string html_escape(std::string_view s);

}  // namespace semsketch
