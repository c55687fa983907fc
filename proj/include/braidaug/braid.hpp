#pragma once

#include <string>
#include <vector>

namespace braidaug {

// Positive braid word on n strands; letters in [1, n-1].
struct BraidWord {
    int n = 2;
    std::vector<int> letters;
    bool operator==(const BraidWord&) const = default;
    int length() const { return int(letters.size()); }
};

struct LinkStats {
    std::vector<int> permutation;  // strand j (1-based) ends at permutation[j-1]
    int components = 0;
    int length = 0;
    int tb = 0;
};

// Letters must lie in range; parse_braid additionally rejects words that skip a level.
BraidWord make_word(int n, std::vector<int> letters);
BraidWord parse_braid(const std::string& text, int n = 0);
std::string word_to_string(const BraidWord& w);

LinkStats link_stats(const BraidWord& w);

// (i, j, i) -> (j, i, j) at 1-based position pos; requires |i - j| == 1.
BraidWord apply_braid_move(const BraidWord& w, int pos);

enum class RotateDir { LastToFront, FrontToLast };
BraidWord rotate_word(const BraidWord& w, RotateDir dir);

// Removes position k (1-based); the level coverage check is deliberately skipped.
BraidWord delete_crossing(const BraidWord& w, int k);

}  // namespace braidaug
