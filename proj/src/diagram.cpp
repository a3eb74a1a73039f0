#include "arcnum/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace arcnum {

namespace {

std::string default_label(int chord_idx, int n) {
    if (n <= 26) return std::string(1, static_cast<char>('A' + chord_idx));
    return std::to_string(chord_idx + 1);
}

std::vector<std::string> tokenize(std::string_view text) {
    const bool separated =
        text.find_first_of(" \t,\r\n") != std::string_view::npos;
    std::vector<std::string> tokens;
    if (separated) {
        std::string current;
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n') {
                if (!current.empty()) tokens.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        if (!current.empty()) tokens.push_back(std::move(current));
        for (const auto& tok : tokens) {
            for (char c : tok) {
                if (!std::isalnum(static_cast<unsigned char>(c))) {
                    throw std::invalid_argument(
                        "malformed word: invalid token '" + tok + "'");
                }
            }
        }
    } else {
        for (char c : text) {
            if (c < 'A' || c > 'Z') {
                throw std::invalid_argument(
                    std::string("malformed word: unexpected character '") + c +
                    "' (expected uppercase letters or separated tokens)");
            }
            tokens.emplace_back(1, c);
        }
    }
    return tokens;
}

// First-occurrence chord id sequence of the word read from position r.
std::vector<int> ids_from_rotation(const ChordDiagram& d, int r) {
    const int two_n = d.positions();
    std::vector<int> ids(two_n);
    std::vector<int> assigned(d.chords(), -1);
    int next = 0;
    for (int i = 0; i < two_n; ++i) {
        const int chord = d.chord_index((i + r) % two_n);
        if (assigned[chord] < 0) assigned[chord] = next++;
        ids[i] = assigned[chord];
    }
    return ids;
}

std::string render_ids(const std::vector<int>& ids, int n) {
    std::string out;
    if (n <= 26) {
        out.reserve(ids.size());
        for (int id : ids) out.push_back(static_cast<char>('A' + id));
    } else {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(ids[i] + 1);
        }
    }
    return out;
}

}  // namespace

ChordDiagram ChordDiagram::from_partner(std::vector<int> partner) {
    return from_partner(std::move(partner), {});
}

ChordDiagram ChordDiagram::from_partner(std::vector<int> partner,
                                        std::vector<std::string> labels) {
    const int two_n = static_cast<int>(partner.size());
    if (two_n % 2 != 0)
        throw std::invalid_argument("partner array must have even length");
    for (int p = 0; p < two_n; ++p) {
        const int q = partner[p];
        if (q < 0 || q >= two_n)
            throw std::invalid_argument("partner index out of range");
        if (q == p) throw std::invalid_argument("partner involution has a fixed point");
        if (partner[q] != p)
            throw std::invalid_argument("partner is not an involution");
    }

    ChordDiagram d;
    d.partner_ = std::move(partner);
    d.chord_of_.assign(two_n, -1);
    int next = 0;
    for (int p = 0; p < two_n; ++p) {
        if (d.chord_of_[p] >= 0) continue;
        d.chord_of_[p] = next;
        d.chord_of_[d.partner_[p]] = next;
        ++next;
    }
    const int n = next;

    if (labels.empty()) {
        d.labels_.resize(two_n);
        d.chord_labels_.resize(n);
        for (int p = 0; p < two_n; ++p)
            d.labels_[p] = default_label(d.chord_of_[p], n);
        for (int p = 0; p < two_n; ++p) d.chord_labels_[d.chord_of_[p]] = d.labels_[p];
    } else {
        if (static_cast<int>(labels.size()) != two_n)
            throw std::invalid_argument("labels length must equal 2n");
        for (int p = 0; p < two_n; ++p) {
            if (labels[p] != labels[d.partner_[p]])
                throw std::invalid_argument("chord endpoints carry different labels");
        }
        d.chord_labels_.resize(n);
        for (int p = 0; p < two_n; ++p) d.chord_labels_[d.chord_of_[p]] = labels[p];
        // distinct chords must have distinct labels
        std::unordered_map<std::string, int> seen;
        for (int c = 0; c < n; ++c) {
            if (!seen.try_emplace(d.chord_labels_[c], c).second)
                throw std::invalid_argument("duplicate chord label '" +
                                            d.chord_labels_[c] + "'");
        }
        d.labels_ = std::move(labels);
    }
    return d;
}

ChordDiagram parse_gauss_word(std::string_view text) {
    const std::vector<std::string> tokens = tokenize(text);
    std::unordered_map<std::string, int> first_pos;
    std::unordered_map<std::string, int> count;
    std::vector<std::string> order;

    const int two_n = static_cast<int>(tokens.size());
    std::vector<int> partner(two_n, -1);
    for (int p = 0; p < two_n; ++p) {
        const std::string& tok = tokens[p];
        auto [it, inserted] = count.try_emplace(tok, 0);
        if (inserted) {
            order.push_back(tok);
            first_pos[tok] = p;
        }
        ++it->second;
        if (it->second == 2) {
            const int q = first_pos[tok];
            partner[p] = q;
            partner[q] = p;
        }
    }
    for (const std::string& tok : order) {
        if (count[tok] != 2) {
            throw std::invalid_argument("malformed word: token '" + tok +
                                        "' appears " + std::to_string(count[tok]) +
                                        " times (expected 2)");
        }
    }
    return ChordDiagram::from_partner(std::move(partner), std::move(tokens));
}

std::string to_gauss_word(const ChordDiagram& d) {
    return render_ids(ids_from_rotation(d, 0), d.chords());
}

std::string canonical_form(const ChordDiagram& d) {
    const int two_n = d.positions();
    if (two_n == 0) return "";
    std::vector<int> best = ids_from_rotation(d, 0);
    for (int r = 1; r < two_n; ++r) {
        std::vector<int> cand = ids_from_rotation(d, r);
        if (cand < best) best = std::move(cand);
    }
    return render_ids(best, d.chords());
}

bool is_equivalent(const ChordDiagram& a, const ChordDiagram& b) {
    return canonical_form(a) == canonical_form(b);
}

ChordDiagram rotated(const ChordDiagram& d, int r) {
    const int two_n = d.positions();
    if (two_n == 0) return d;
    r = ((r % two_n) + two_n) % two_n;
    std::vector<int> partner(two_n);
    std::vector<std::string> labels(two_n);
    for (int i = 0; i < two_n; ++i) {
        const int old = (i + r) % two_n;
        partner[i] = ((d.partner(old) - r) % two_n + two_n) % two_n;
        labels[i] = d.label(old);
    }
    return ChordDiagram::from_partner(std::move(partner), std::move(labels));
}

Subdiagram subdiagram(const ChordDiagram& d, const std::vector<std::string>& chords) {
    std::unordered_map<std::string, int> by_label;
    for (int c = 0; c < d.chords(); ++c) by_label[d.chord_labels()[c]] = c;

    std::vector<char> keep(d.chords(), 0);
    for (const std::string& name : chords) {
        auto it = by_label.find(name);
        if (it == by_label.end())
            throw std::invalid_argument("unknown chord '" + name + "'");
        keep[it->second] = 1;
    }

    Subdiagram out;
    std::vector<int> new_index(d.positions(), -1);
    for (int p = 0; p < d.positions(); ++p) {
        if (!keep[d.chord_index(p)]) continue;
        new_index[p] = static_cast<int>(out.position_map.size());
        out.position_map.push_back(p);
    }
    std::vector<int> partner(out.position_map.size());
    std::vector<std::string> labels(out.position_map.size());
    for (std::size_t i = 0; i < out.position_map.size(); ++i) {
        const int old = out.position_map[i];
        partner[i] = new_index[d.partner(old)];
        labels[i] = d.label(old);
    }
    out.diagram = ChordDiagram::from_partner(std::move(partner), std::move(labels));
    return out;
}

}  // namespace arcnum
