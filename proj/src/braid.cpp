#include "braidaug/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidaug/algebra.hpp"

namespace braidaug {

BraidWord make_word(int n, std::vector<int> letters) {
    if (n < 2) fail(Errc::LetterOutOfRange, "strand count must be at least 2");
    for (int l : letters)
        if (l < 1 || l >= n)
            fail(Errc::LetterOutOfRange, "letter " + std::to_string(l) + " out of range for n=" +
                                             std::to_string(n));
    return {n, std::move(letters)};
}

BraidWord parse_braid(const std::string& text, int n) {
    std::vector<int> letters;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t pos = tok.find_first_not_of(" \t");
        if (pos == std::string::npos) fail(Errc::BadSyntax, "empty letter in braid word");
        size_t end = tok.find_last_not_of(" \t");
        tok = tok.substr(pos, end - pos + 1);
        char* rest = nullptr;
        long v = std::strtol(tok.c_str(), &rest, 10);
        if (*rest != '\0' || v <= 0) fail(Errc::BadSyntax, "bad letter '" + tok + "'");
        letters.push_back(int(v));
    }
    if (letters.empty()) fail(Errc::BadSyntax, "empty braid word");
    int max_letter = *std::max_element(letters.begin(), letters.end());
    if (n == 0) n = max_letter + 1;
    BraidWord w = make_word(n, std::move(letters));
    std::vector<bool> used(size_t(n), false);
    for (int l : w.letters) used[size_t(l)] = true;
    for (int level = 1; level < n; ++level)
        if (!used[size_t(level)])
            fail(Errc::EmptyLevel, "level " + std::to_string(level) + " unused");
    return w;
}

std::string word_to_string(const BraidWord& w) {
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.letters[i]);
    }
    return out;
}

LinkStats link_stats(const BraidWord& w) {
    LinkStats st;
    st.length = w.length();
    st.tb = w.length() - w.n;
    std::vector<int> perm(size_t(w.n), 0);
    std::iota(perm.begin(), perm.end(), 1);
    for (int l : w.letters) std::swap(perm[size_t(l - 1)], perm[size_t(l)]);
    st.permutation = perm;
    std::vector<bool> seen(size_t(w.n), false);
    for (int i = 0; i < w.n; ++i) {
        if (seen[size_t(i)]) continue;
        ++st.components;
        for (int j = i; !seen[size_t(j)]; j = perm[size_t(j)] - 1) seen[size_t(j)] = true;
    }
    return st;
}

BraidWord apply_braid_move(const BraidWord& w, int pos) {
    if (pos < 1 || pos + 2 > w.length())
        fail(Errc::IndexOutOfRange, "braid move position out of range");
    int i = w.letters[size_t(pos - 1)];
    int j = w.letters[size_t(pos)];
    if (w.letters[size_t(pos + 1)] != i || std::abs(i - j) != 1)
        fail(Errc::PatternMismatch, "no (i,j,i) pattern with |i-j|=1 at position " +
                                        std::to_string(pos));
    BraidWord out = w;
    out.letters[size_t(pos - 1)] = j;
    out.letters[size_t(pos)] = i;
    out.letters[size_t(pos + 1)] = j;
    return out;
}

BraidWord rotate_word(const BraidWord& w, RotateDir dir) {
    if (w.letters.empty()) fail(Errc::EmptyWord, "cannot rotate the empty word");
    BraidWord out = w;
    if (dir == RotateDir::LastToFront) {
        int last = out.letters.back();
        out.letters.pop_back();
        out.letters.insert(out.letters.begin(), last);
    } else {
        int first = out.letters.front();
        out.letters.erase(out.letters.begin());
        out.letters.push_back(first);
    }
    return out;
}

BraidWord delete_crossing(const BraidWord& w, int k) {
    if (k < 1 || k > w.length()) fail(Errc::IndexOutOfRange, "delete position out of range");
    BraidWord out = w;
    out.letters.erase(out.letters.begin() + (k - 1));
    return out;
}

}  // namespace braidaug
