#include "toeplitz/holeword.hpp"

#include <string>

#include "toeplitz/errors.hpp"
#include "toeplitz/kernels.hpp"

namespace toeplitz {

bool is_letter(char c) noexcept {
    const auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f && c != kHole && c != kHoleAlias;
}

namespace {

void validate_letters(std::string_view letters) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const char c = letters[i];
        if (is_letter(c)) continue;
        const std::string pos = std::to_string(i + 1);
        if (c == kHole || c == kHoleAlias) {
            throw ValidationError("hole symbol at position " + pos + " inside a word");
        }
        throw ValidationError("character at position " + pos +
                              " is not a printable non-whitespace letter");
    }
}

} // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) { validate_letters(letters_); }

Word Word::trusted(std::string letters) noexcept { return Word(TrustedTag{}, std::move(letters)); }

PartialWord PartialWord::parse(std::string_view text) {
    if (text.empty()) throw ValidationError("partial word is empty; expected letters followed by '?'");
    const char last = text.back();
    if (last != kHole && last != kHoleAlias) {
        throw ValidationError("partial word must end with exactly one '?'");
    }
    return PartialWord(Word(std::string(text.substr(0, text.size() - 1))));
}

PartialWord compose(const PartialWord& u, const PartialWord& v) {
    const std::string_view ub = u.body().view();
    const std::string_view vb = v.body().view();
    const Index total = checked_mul(u.length(), v.length(), "composition length");

    std::string out;
    out.reserve(total - 1);
    for (char c : vb) {
        out.append(ub);
        out.push_back(c);
    }
    out.append(ub);
    return PartialWord(Word::trusted(std::move(out)));
}

PartialWord iterate(const PartialWord& u, unsigned n) {
    if (n == 0) throw PreconditionError("iterate requires n >= 1");
    const Index total = checked_pow(u.length(), n, "iterate length");
    if (total - 1 > std::string().max_size()) throw OverflowError("iterate length exceeds addressable size");
    PartialWord acc = u;
    for (unsigned i = 1; i < n; ++i) acc = compose(acc, u);
    return acc;
}

Word expand(const PartialWord& u, std::size_t length) {
    if (u.length() < 2) throw PreconditionError("expand requires |U| >= 2; the bare hole has no limit word");
    return Word::trusted(kernels::fixed_prefix_parallel(u.body().view(), u.length(), length));
}

char WordStream::next() {
    if (pos_ >= word_.size()) throw StreamExhausted("finite letter source exhausted");
    return word_.view()[pos_++];
}

LimitStream::LimitStream(PartialWord u) : u_(std::move(u)) {
    if (u_.length() < 2) throw PreconditionError("limit stream requires |U| >= 2");
}

char LimitStream::next() {
    ++pos_;
    return kernels::letter_at(u_.body().view(), u_.length(), pos_);
}

ComposedStream::ComposedStream(PartialWord u, std::unique_ptr<LetterStream> source)
    : u_(std::move(u)), source_(std::move(source)) {
    if (!source_) throw PreconditionError("composed stream needs a source");
}

char ComposedStream::next() {
    const std::string_view body = u_.body().view();
    if (pos_ < body.size()) return body[pos_++];
    pos_ = 0;
    return source_->next();
}

std::unique_ptr<LetterStream> compose_stream(const PartialWord& u, std::unique_ptr<LetterStream> source) {
    return std::make_unique<ComposedStream>(u, std::move(source));
}

Word take(LetterStream& stream, std::size_t count) {
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
    return Word::trusted(std::move(out));
}

} // namespace toeplitz
