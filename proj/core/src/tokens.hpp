#pragma once

// Internal whitespace tokenizer shared by the text parsers. Tracks 1-based
// line/column positions so ParseError can point at the offending token.

#include <cstddef>
#include <string>
#include <vector>

#include "propcat/error.hpp"
#include "propcat/finset.hpp"

namespace propcat {
struct Cospan;
}

namespace propcat::detail {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++column;
            ++i;
            continue;
        }
        Token t{"", line, column};
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r' && s[i] != '\n') {
            t.text.push_back(s[i]);
            ++i;
            ++column;
        }
        out.push_back(std::move(t));
    }
    return out;
}

class TokenCursor;

// Defined in cospan.cpp; shared with the morphism parser, which embeds a
// cospan literal. The raw variant keeps the literal's middle numbering so
// callers can align per-middle-element data before normalizing.
Cospan parse_cospan_at(TokenCursor& cur);
struct RawCospanLegs {
    FinMap left;
    FinMap right;
};
RawCospanLegs parse_cospan_raw(TokenCursor& cur);

class TokenCursor {
public:
    explicit TokenCursor(const std::string& s) : tokens_(tokenize(s)) {}

    bool at_end() const { return pos_ >= tokens_.size(); }

    const Token& peek() const {
        if (at_end()) fail("unexpected end of input");
        return tokens_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    // Consume a token that must match exactly.
    void expect(const std::string& text) {
        if (at_end()) fail("expected '" + text + "' but input ended");
        if (tokens_[pos_].text != text) {
            fail("expected '" + text + "', found '" + tokens_[pos_].text + "'");
        }
        ++pos_;
    }

    bool peek_is(const std::string& text) const {
        return !at_end() && tokens_[pos_].text == text;
    }

    // Consume a nonnegative integer token.
    std::size_t next_number() {
        if (at_end()) fail("expected a number but input ended");
        const Token& t = tokens_[pos_];
        if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a number, found '" + t.text + "'");
        }
        std::size_t value = 0;
        for (char c : t.text) {
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        ++pos_;
        return value;
    }

    bool peek_is_number() const {
        return !at_end() && !tokens_[pos_].text.empty() &&
               tokens_[pos_].text.find_first_not_of("0123456789") == std::string::npos;
    }

    [[noreturn]] void fail(const std::string& message) const {
        if (pos_ < tokens_.size()) {
            throw ParseError(message, tokens_[pos_].line, tokens_[pos_].column);
        }
        std::size_t line = 1, column = 1;
        if (!tokens_.empty()) {
            line = tokens_.back().line;
            column = tokens_.back().column + tokens_.back().text.size();
        }
        throw ParseError(message, line, column);
    }

    void expect_end() {
        if (!at_end()) {
            fail("unexpected trailing token '" + tokens_[pos_].text + "'");
        }
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace propcat::detail
