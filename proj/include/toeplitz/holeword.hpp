#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toeplitz/arith.hpp"

namespace toeplitz {

inline constexpr char kHole = '?';
// Accepted on input as a shell-friendly spelling of the hole; never a letter.
inline constexpr char kHoleAlias = '.';

// A letter is any printable, non-whitespace ASCII character other than the
// hole and its alias.
bool is_letter(char c) noexcept;

// Finite word over the open alphabet. Never contains a hole.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);

    // Skips validation; for letters copied out of an already valid word.
    static Word trusted(std::string letters) noexcept;

    const std::string& str() const noexcept { return letters_; }
    std::string_view view() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    // 1-based, unchecked.
    char at1(std::size_t j) const noexcept { return letters_[j - 1]; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    struct TrustedTag {};
    Word(TrustedTag, std::string letters) noexcept : letters_(std::move(letters)) {}

    std::string letters_;
};

// Hole-terminated partial word u_1...u_{r-1}?. The hole is implicit; "?" (empty
// body) is the identity of composition.
class PartialWord {
public:
    PartialWord() = default;
    explicit PartialWord(Word body) : body_(std::move(body)) {}

    // Parses "body?" (or "body."). Rejects the empty string, whitespace, and
    // any hole that is not the final character.
    static PartialWord parse(std::string_view text);

    const Word& body() const noexcept { return body_; }
    // Length r including the hole.
    Index length() const noexcept { return body_.size() + 1; }
    std::string str() const { return body_.str() + kHole; }

    friend bool operator==(const PartialWord&, const PartialWord&) = default;

private:
    Word body_;
};

// U o V: |V| copies of U's body, the j-th followed by v_j, the last by the hole.
PartialWord compose(const PartialWord& u, const PartialWord& v);

// U^(n) = U^(n-1) o U. Throws OverflowError when |U|^n does not fit.
PartialWord iterate(const PartialWord& u, unsigned n);

// First `length` letters of the limit word U^(inf). Requires |U| >= 2.
Word expand(const PartialWord& u, std::size_t length);

// Sequential single-consumer letter source. Infinite streams never throw;
// finite ones throw StreamExhausted past their end.
class LetterStream {
public:
    virtual ~LetterStream() = default;
    virtual char next() = 0;
};

class StreamExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Yields the letters of a finite word, then throws StreamExhausted.
class WordStream final : public LetterStream {
public:
    explicit WordStream(Word word) : word_(std::move(word)) {}
    char next() override;

private:
    Word word_;
    std::size_t pos_ = 0;
};

// Streams U^(inf) letter by letter using O(log n) random access per letter.
class LimitStream final : public LetterStream {
public:
    explicit LimitStream(PartialWord u);
    char next() override;

private:
    PartialWord u_;
    Index pos_ = 0;
};

// U o source: U's body, then one letter pulled from source, forever.
class ComposedStream final : public LetterStream {
public:
    ComposedStream(PartialWord u, std::unique_ptr<LetterStream> source);
    char next() override;

private:
    PartialWord u_;
    std::unique_ptr<LetterStream> source_;
    std::size_t pos_ = 0;
};

std::unique_ptr<LetterStream> compose_stream(const PartialWord& u, std::unique_ptr<LetterStream> source);

// Pulls `count` letters from a stream.
Word take(LetterStream& stream, std::size_t count);

} // namespace toeplitz
