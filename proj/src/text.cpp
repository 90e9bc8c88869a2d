#include "semsketch/text.hpp"

#include <array>
#include <cctype>

namespace semsketch {

namespace {

bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

std::size_t utf8_length(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char b : s) {
        if (!is_continuation(b)) ++n;
    }
    return n;
}

std::string utf8_substr(std::string_view s, std::size_t from, std::size_t to) {
    if (from >= to) return {};
    std::size_t cp = 0;
    std::size_t byte_from = s.size();
    std::size_t byte_to = s.size();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_continuation(static_cast<unsigned char>(s[i]))) continue;
        if (cp == from) byte_from = i;
        if (cp == to) {
            byte_to = i;
            break;
        }
        ++cp;
    }
    if (byte_from >= byte_to) return {};
    return std::string(s.substr(byte_from, byte_to - byte_from));
}

std::string head_lemma(std::string_view phrase, HeadRule rule) {
    auto tokens = whitespace_tokens(phrase);
    if (tokens.empty()) return std::string(phrase);
    return rule == HeadRule::LastToken ? tokens.back() : tokens.front();
}

std::vector<std::string> whitespace_tokens(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

std::string strip_punctuation(std::string_view token) {
    static const std::array<std::string_view, 22> punct = {
        ".", ",", ";", ":", "!", "?", "(", ")", "[",  "]",  "{",
        "}", "\"", "'", "`", "«", "»", "—", "–", "…", "‘", "’"};
    bool changed = true;
    while (changed && !token.empty()) {
        changed = false;
        for (auto p : punct) {
            if (token.size() >= p.size() && token.substr(0, p.size()) == p) {
                token.remove_prefix(p.size());
                changed = true;
            }
            if (token.size() >= p.size() && token.substr(token.size() - p.size()) == p) {
                token.remove_suffix(p.size());
                changed = true;
            }
        }
    }
    return std::string(token);
}

bool contains_whitespace(std::string_view s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) return true;
    }
    return false;
}

std::string html_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace semsketch
