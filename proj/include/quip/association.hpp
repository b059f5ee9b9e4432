#pragma once

// Word-embedding association engine over a word2vec-format table. Vectors are
// unit-normalized at load so cosine similarity is a plain dot product.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "quip/errors.hpp"
#include "quip/text.hpp"

namespace quip {

struct Association {
    std::string token;  // surface form, underscores rendered as spaces
    std::string raw;    // vocabulary token as stored
    double similarity = 0;
    bool is_chunk = false;
    std::size_t index = 0;
};

enum class EmbeddingFormat { automatic, text, binary };

class EmbeddingStore {
public:
    using Vector = std::vector<float>;

    EmbeddingStore() = default;

    // Builds a store from in-memory rows; the same validation as the loaders.
    static EmbeddingStore from_rows(std::size_t dim, const std::vector<std::pair<std::string, Vector>>& rows) {
        EmbeddingStore s;
        s.dim_ = dim;
        std::size_t row = 0;
        for (const auto& [tok, v] : rows) {
            ++row;
            if (v.size() != dim) {
                throw ParseError("embedding row " + std::to_string(row) + " has dimension " +
                                 std::to_string(v.size()) + ", expected " + std::to_string(dim));
            }
            s.add(tok, v.data(), row);
        }
        return s;
    }

    // word2vec text layout: header `count dim`, then `token v1 ... vd` rows.
    static EmbeddingStore load_text(std::istream& in) {
        EmbeddingStore s;
        std::string line;
        std::size_t count = 0;
        if (!std::getline(in, line) || !parse_header(line, count, s.dim_)) {
            throw ParseError("embedding header must be `count dim`", 1);
        }
        std::vector<float> buf;
        std::size_t row = 0;
        while (row < count && std::getline(in, line)) {
            auto fields = text::split_ws(line);
            if (fields.empty()) continue;
            ++row;
            if (fields.size() != s.dim_ + 1) {
                throw ParseError("embedding row " + std::to_string(row) + " has dimension " +
                                 std::to_string(fields.size() - 1) + ", expected " + std::to_string(s.dim_));
            }
            buf.resize(s.dim_);
            for (std::size_t i = 0; i < s.dim_; ++i) {
                std::string f(fields[i + 1]);
                char* end = nullptr;
                buf[i] = std::strtof(f.c_str(), &end);
                if (end == f.c_str() || *end != '\0') {
                    throw ParseError("embedding row " + std::to_string(row) + " has a non-numeric value");
                }
            }
            s.add(std::string(fields[0]), buf.data(), row);
        }
        if (row < count) {
            throw ParseError("embedding file ended after " + std::to_string(row) + " of " + std::to_string(count) +
                             " rows");
        }
        return s;
    }

    // word2vec binary layout: text header line, then per row the token, one
    // space, and `dim` little-endian float32 values.
    static EmbeddingStore load_binary(std::istream& in) {
        EmbeddingStore s;
        std::string line;
        std::size_t count = 0;
        if (!std::getline(in, line) || !parse_header(line, count, s.dim_)) {
            throw ParseError("embedding header must be `count dim`", 1);
        }
        std::vector<float> buf(s.dim_);
        for (std::size_t row = 1; row <= count; ++row) {
            std::string tok;
            char c = 0;
            while (in.get(c) && (c == '\n' || c == ' ')) {}
            if (!in) throw ParseError("embedding file ended at row " + std::to_string(row));
            do {
                tok += c;
            } while (in.get(c) && c != ' ');
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(s.dim_ * sizeof(float)));
            if (in.gcount() != static_cast<std::streamsize>(s.dim_ * sizeof(float))) {
                throw ParseError("embedding row " + std::to_string(row) + " is truncated");
            }
            if constexpr (std::endian::native == std::endian::big) {
                for (auto& f : buf) {
                    auto u = std::bit_cast<std::uint32_t>(f);
                    u = (u >> 24) | ((u >> 8) & 0xff00) | ((u << 8) & 0xff0000) | (u << 24);
                    f = std::bit_cast<float>(u);
                }
            }
            s.add(tok, buf.data(), row);
        }
        return s;
    }

    static EmbeddingStore load_file(const std::string& path, EmbeddingFormat fmt = EmbeddingFormat::automatic) {
        if (fmt == EmbeddingFormat::automatic) {
            fmt = path.ends_with(".bin") ? EmbeddingFormat::binary : EmbeddingFormat::text;
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open embedding file '" + path + "'");
        return fmt == EmbeddingFormat::binary ? load_binary(in) : load_text(in);
    }

    std::size_t size() const noexcept { return vocab_.size(); }
    std::size_t dimension() const noexcept { return dim_; }
    const std::vector<std::string>& vocabulary() const noexcept { return vocab_; }

    std::span<const float> vector(std::size_t index) const {
        return {data_.data() + index * dim_, dim_};
    }

    // Exact token lookup.
    std::optional<std::size_t> index_of(std::string_view token) const {
        auto it = index_.find(std::string(token));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Surface form first, then lowercase; spaces are treated as the chunk
    // separator.
    std::optional<std::size_t> find(std::string_view word) const {
        std::string tok(word);
        std::replace(tok.begin(), tok.end(), ' ', '_');
        if (auto i = index_of(tok)) return i;
        return index_of(text::lower(tok));
    }

    std::optional<double> similarity(std::string_view a, std::string_view b) const {
        auto ia = find(a), ib = find(b);
        if (!ia || !ib) return std::nullopt;
        return dot(vector(*ia), vector(*ib));
    }

    // The k most similar tokens to `token`, excluding itself, by descending
    // cosine similarity with ties broken by vocabulary order. Absent if the
    // query is out of vocabulary.
    std::optional<std::vector<Association>> most_similar(std::string_view token, std::size_t k) const {
        auto q = find(token);
        if (!q) return std::nullopt;
        return nearest(vector(*q), k, *q);
    }

    // Nearest neighbours of an arbitrary unit vector. `exclude` is a vocabulary
    // index to leave out, or size() for none.
    std::vector<Association> nearest(std::span<const float> query, std::size_t k,
                                     std::optional<std::size_t> exclude = std::nullopt) const {
        std::vector<std::pair<double, std::size_t>> scored;
        scored.reserve(vocab_.size());
        for (std::size_t i = 0; i < vocab_.size(); ++i) {
            if (exclude && i == *exclude) continue;
            scored.emplace_back(dot(query, vector(i)), i);
        }
        auto better = [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first > y.first : x.second < y.second;
        };
        k = std::min(k, scored.size());
        std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end(), better);
        std::vector<Association> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& raw = vocab_[scored[i].second];
            out.push_back({text::surface_of_token(raw), raw, scored[i].first,
                           raw.find('_') != std::string::npos, scored[i].second});
        }
        return out;
    }

    // Embedding for a multi-word span: the joined chunk if it is in the
    // vocabulary, else the normalized mean of the member vectors present.
    std::optional<Vector> phrase_vector(const std::vector<std::string>& words) const {
        if (words.empty()) return std::nullopt;
        if (auto i = find(text::join(words, "_"))) {
            auto v = vector(*i);
            return Vector(v.begin(), v.end());
        }
        std::vector<double> acc(dim_, 0.0);
        bool any = false;
        for (const auto& w : words) {
            auto i = find(w);
            if (!i) continue;
            any = true;
            auto v = vector(*i);
            for (std::size_t d = 0; d < dim_; ++d) acc[d] += v[d];
        }
        if (!any) return std::nullopt;
        double norm = std::sqrt(std::inner_product(acc.begin(), acc.end(), acc.begin(), 0.0));
        if (norm == 0.0) return std::nullopt;
        Vector out(dim_);
        for (std::size_t d = 0; d < dim_; ++d) out[d] = static_cast<float>(acc[d] / norm);
        return out;
    }

    static double dot(std::span<const float> a, std::span<const float> b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
        return s;
    }

private:
    static bool parse_header(const std::string& line, std::size_t& count, std::size_t& dim) {
        auto f = text::split_ws(line);
        if (f.size() != 2) return false;
        try {
            count = std::stoul(std::string(f[0]));
            dim = std::stoul(std::string(f[1]));
        } catch (const std::exception&) {
            return false;
        }
        return dim > 0;
    }

    void add(const std::string& token, const float* v, std::size_t row) {
        double norm = 0;
        for (std::size_t i = 0; i < dim_; ++i) norm += static_cast<double>(v[i]) * static_cast<double>(v[i]);
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw ParseError("embedding row " + std::to_string(row) + " ('" + token + "') is a zero vector");
        }
        if (index_.contains(token)) return;
        index_.emplace(token, vocab_.size());
        vocab_.push_back(token);
        for (std::size_t i = 0; i < dim_; ++i) data_.push_back(static_cast<float>(v[i] / norm));
    }

    std::size_t dim_ = 0;
    std::vector<std::string> vocab_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<float> data_;
};

}  // namespace quip
