#include "lkrep/braid.hpp"

#include <cctype>
#include <stdexcept>
#include <random>
#include <sstream>

namespace lkrep {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 2) throw dimension_error("braid word needs at least 2 strands");
    for (int k : letters_) {
        if (k == 0 || std::abs(k) >= strands_)
            throw dimension_error("generator index " + std::to_string(k) +
                                  " out of range for " + std::to_string(strands_) +
                                  " strands");
    }
}

int BraidWord::exponent_sum() const {
    int sum = 0;
    for (int k : letters_) sum += (k > 0) ? 1 : -1;
    return sum;
}

BraidWord BraidWord::inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& k : out) k = -k;
    return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k : letters_) {
        if (!first) os << ' ';
        first = false;
        os << 's' << std::abs(k);
        if (k < 0) os << "^-1";
    }
    return os.str();
}

namespace {

struct Token {
    int generator = 0;   // signed
    long exponent = 1;
    std::size_t position = 0;
};

long parse_int(const std::string& text, std::size_t& i, std::size_t token_pos) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits_from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_from) throw parse_error("expected an integer", token_pos);
    try {
        return std::stol(text.substr(start, i - start));
    } catch (const std::out_of_range&) {
        throw parse_error("integer out of range", token_pos);
    }
}

Token parse_token(const std::string& text, std::size_t& i) {
    Token tok;
    tok.position = i;
    bool negative = false;
    if (text[i] == 's' || text[i] == 'S') {
        ++i;
        const long idx = parse_int(text, i, tok.position);
        if (idx <= 0) throw parse_error("generator index must be positive", tok.position);
        tok.generator = static_cast<int>(idx);
    } else {
        const long idx = parse_int(text, i, tok.position);
        if (idx == 0) throw parse_error("generator index must be nonzero", tok.position);
        negative = idx < 0;
        tok.generator = static_cast<int>(std::abs(idx));
    }
    if (i < text.size() && text[i] == '^') {
        ++i;
        tok.exponent = parse_int(text, i, tok.position);
    }
    if (negative) tok.exponent = -tok.exponent;
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
        throw parse_error("unexpected character '" + std::string(1, text[i]) + "'", i);
    return tok;
}

}  // namespace

BraidWord parse_word(const std::string& text, int strands) {
    if (strands < 2) throw dimension_error("braid word needs at least 2 strands");
    std::vector<int> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        Token tok = parse_token(text, i);
        if (tok.generator >= strands)
            throw parse_error("generator s" + std::to_string(tok.generator) +
                                  " out of range for " + std::to_string(strands) + " strands",
                              tok.position);
        const int letter = tok.exponent < 0 ? -tok.generator : tok.generator;
        for (long r = 0; r < std::abs(tok.exponent); ++r) letters.push_back(letter);
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord word_concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw dimension_error("word_concat: strand counts disagree");
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    for (int k : w.letters()) {
        if (!stack.empty() && stack.back() == -k)
            stack.pop_back();
        else
            stack.push_back(k);
    }
    return BraidWord(w.strands(), std::move(stack));
}

BraidWord random_word(int strands, std::size_t length, std::uint64_t seed) {
    if (strands < 2) throw dimension_error("random_word needs at least 2 strands");
    std::mt19937_64 rng(seed);
    const int alphabet = 2 * (strands - 1);
    std::vector<int> letters;
    letters.reserve(length);
    while (letters.size() < length) {
        // Map 0..2(n-1)-1 onto {1..n-1, -1..-(n-1)} without distribution
        // objects, so the stream is identical across standard libraries.
        const int pick = static_cast<int>(rng() % alphabet);
        const int letter = pick < strands - 1 ? pick + 1 : -(pick - (strands - 1) + 1);
        if (!letters.empty() && letters.back() == -letter) continue;
        letters.push_back(letter);
    }
    return BraidWord(strands, std::move(letters));
}

}  // namespace lkrep
