#include "lutz/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "lutz/error.hpp"

namespace lutz {

unsigned CodeLengths::symbol_count() const noexcept {
    return static_cast<unsigned>(std::count_if(lengths.begin(), lengths.end(), [](std::uint8_t l) { return l != 0; }));
}

void BitWriter::put(std::uint32_t code, unsigned length) {
    acc_ = (acc_ << length) | (code & ((std::uint64_t{1} << length) - 1));
    acc_bits_ += length;
    stream_.bit_count += length;
    while (acc_bits_ >= 8) {
        acc_bits_ -= 8;
        stream_.bytes.push_back(static_cast<std::uint8_t>(acc_ >> acc_bits_));
    }
}

BitStream BitWriter::take() && {
    if (acc_bits_ > 0) stream_.bytes.push_back(static_cast<std::uint8_t>(acc_ << (8 - acc_bits_)));
    acc_bits_ = 0;
    return std::move(stream_);
}

int BitReader::get() noexcept {
    if (pos_ >= stream_->bit_count || (pos_ >> 3) >= stream_->bytes.size()) return -1;
    const int bit = (stream_->bytes[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
    ++pos_;
    return bit;
}

namespace {

struct Leaf {
    std::uint64_t weight;
    unsigned symbol;
};

// Plain Huffman tree depths. Node ids break weight ties: leaves use their
// symbol value, merged nodes get increasing ids above 255.
std::vector<unsigned> huffman_depths(const std::vector<Leaf>& leaves) {
    using Entry = std::pair<std::uint64_t, unsigned>;  // (weight, node id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<unsigned> parent(2 * 256, 0);
    for (const auto& leaf : leaves) heap.emplace(leaf.weight, leaf.symbol);
    unsigned next_id = 256;
    while (heap.size() > 1) {
        const auto [wa, a] = heap.top();
        heap.pop();
        const auto [wb, b] = heap.top();
        heap.pop();
        parent[a] = next_id;
        parent[b] = next_id;
        heap.emplace(wa + wb, next_id++);
    }
    const unsigned root = heap.top().second;
    std::vector<unsigned> depths;
    depths.reserve(leaves.size());
    for (const auto& leaf : leaves) {
        unsigned depth = 0;
        for (unsigned node = leaf.symbol; node != root; node = parent[node]) ++depth;
        depths.push_back(depth);
    }
    return depths;
}

// Package-merge: optimal code lengths bounded by `max_len`.
std::vector<unsigned> package_merge_depths(const std::vector<Leaf>& leaves, unsigned max_len) {
    struct Item {
        std::uint64_t weight;
        int leaf;           // leaf index, or -1 for a package
        std::size_t left;   // packages: children in the previous level's list
        std::size_t right;
    };
    std::vector<std::size_t> order(leaves.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return leaves[x].weight < leaves[y].weight;
    });

    std::vector<std::vector<Item>> levels;
    std::vector<Item> base;
    for (const std::size_t idx : order) base.push_back({leaves[idx].weight, static_cast<int>(idx), 0, 0});
    levels.push_back(base);
    for (unsigned level = 1; level < max_len; ++level) {
        const auto& prev = levels.back();
        std::vector<Item> packages;
        for (std::size_t i = 0; i + 1 < prev.size(); i += 2) {
            packages.push_back({prev[i].weight + prev[i + 1].weight, -1, i, i + 1});
        }
        std::vector<Item> merged;
        merged.reserve(base.size() + packages.size());
        std::merge(base.begin(), base.end(), packages.begin(), packages.end(), std::back_inserter(merged),
                   [](const Item& x, const Item& y) { return x.weight < y.weight; });
        levels.push_back(std::move(merged));
    }

    std::vector<unsigned> depths(leaves.size(), 0);
    // Each selected item at the top level adds one to the depth of every leaf it covers.
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // (level, index)
    const std::size_t take = 2 * leaves.size() - 2;
    const std::size_t top = levels.size() - 1;
    for (std::size_t i = 0; i < take; ++i) stack.emplace_back(top, i);
    while (!stack.empty()) {
        const auto [level, index] = stack.back();
        stack.pop_back();
        const Item& item = levels[level][index];
        if (item.leaf >= 0) {
            ++depths[static_cast<std::size_t>(item.leaf)];
        } else {
            stack.emplace_back(level - 1, item.left);
            stack.emplace_back(level - 1, item.right);
        }
    }
    return depths;
}

}  // namespace

CodeLengths build_code(std::span<const std::uint64_t, 256> freqs) { return build_code_limited(freqs, kMaxCodeLength); }

CodeLengths build_code_limited(std::span<const std::uint64_t, 256> freqs, unsigned max_len) {
    std::vector<Leaf> leaves;
    for (unsigned s = 0; s < 256; ++s) {
        if (freqs[s] != 0) leaves.push_back({freqs[s], s});
    }
    if (leaves.empty()) throw Error(ErrorCode::EmptyAlphabet, "cannot build a code over an empty alphabet");

    CodeLengths code;
    if (leaves.size() == 1) {
        code.lengths[leaves.front().symbol] = 1;
        return code;
    }
    if (max_len == 0 || max_len > kMaxCodeLength || (std::size_t{1} << max_len) < leaves.size()) {
        throw Error(ErrorCode::InvalidCodeLengths,
                    std::to_string(leaves.size()) + " symbols do not fit a " + std::to_string(max_len) + "-bit cap");
    }
    auto depths = huffman_depths(leaves);
    if (*std::max_element(depths.begin(), depths.end()) > max_len) depths = package_merge_depths(leaves, max_len);
    for (std::size_t i = 0; i < leaves.size(); ++i) code.lengths[leaves[i].symbol] = static_cast<std::uint8_t>(depths[i]);
    return code;
}

std::uint64_t kraft_sum_scaled(const CodeLengths& code) noexcept {
    std::uint64_t sum = 0;
    for (const auto len : code.lengths) {
        if (len != 0 && len <= kMaxCodeLength) sum += std::uint64_t{1} << (kMaxCodeLength - len);
    }
    return sum;
}

std::array<std::uint32_t, 256> canonical_codes(const CodeLengths& code) {
    std::array<unsigned, kMaxCodeLength + 1> per_length{};
    for (const auto len : code.lengths) {
        if (len > kMaxCodeLength) {
            throw Error(ErrorCode::InvalidCodeLengths, "code length " + std::to_string(len) + " exceeds 15");
        }
        if (len != 0) ++per_length[len];
    }
    if (kraft_sum_scaled(code) > (std::uint64_t{1} << kMaxCodeLength)) {
        throw Error(ErrorCode::InvalidCodeLengths, "code lengths over-subscribe the code space");
    }
    std::array<std::uint32_t, kMaxCodeLength + 1> next{};
    std::uint32_t value = 0;
    for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
        value = (value + per_length[len - 1]) << 1;
        next[len] = value;
    }
    std::array<std::uint32_t, 256> codes{};
    for (unsigned s = 0; s < 256; ++s) {
        if (code.lengths[s] != 0) codes[s] = next[code.lengths[s]]++;
    }
    return codes;
}

BitStream huff_encode(std::span<const std::uint8_t> data, const CodeLengths& code) {
    const auto codes = canonical_codes(code);
    BitWriter writer;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::uint8_t sym = data[i];
        if (code.lengths[sym] == 0) {
            throw Error(ErrorCode::UncodableSymbol, "symbol " + std::to_string(sym) + " has no codeword", i);
        }
        writer.put(codes[sym], code.lengths[sym]);
    }
    return std::move(writer).take();
}

std::vector<std::uint8_t> huff_decode(const BitStream& bits, const CodeLengths& code, std::uint64_t count) {
    std::vector<std::uint8_t> out;
    if (count == 0) return out;
    (void)canonical_codes(code);  // validates the lengths

    std::array<unsigned, kMaxCodeLength + 1> per_length{};
    unsigned longest = 0;
    for (const auto len : code.lengths) {
        if (len != 0) ++per_length[len];
        longest = std::max<unsigned>(longest, len);
    }
    std::vector<std::uint8_t> sorted;  // symbols in (length, symbol) order
    for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
        for (unsigned s = 0; s < 256; ++s) {
            if (code.lengths[s] == len) sorted.push_back(static_cast<std::uint8_t>(s));
        }
    }

    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, bits.bit_count)));
    BitReader reader(bits);
    for (std::uint64_t produced = 0; produced < count; ++produced) {
        std::uint32_t value = 0;
        std::uint32_t first = 0;
        std::uint32_t index = 0;
        bool done = false;
        for (unsigned len = 1; len <= longest; ++len) {
            const int bit = reader.get();
            if (bit < 0) {
                throw Error(ErrorCode::TruncatedStream, "bit stream ended after " + std::to_string(produced) + " of " +
                                                            std::to_string(count) + " symbols");
            }
            value |= static_cast<std::uint32_t>(bit);
            if (value - first < per_length[len]) {
                out.push_back(sorted[index + (value - first)]);
                done = true;
                break;
            }
            index += per_length[len];
            first = (first + per_length[len]) << 1;
            value <<= 1;
        }
        if (!done) throw Error(ErrorCode::InvalidCodeword, "no codeword matches at bit " + std::to_string(reader.position()));
    }
    return out;
}

std::array<std::uint64_t, 256> byte_histogram(std::span<const std::uint8_t> data) noexcept {
    std::array<std::uint64_t, 256> freqs{};
    for (const std::uint8_t b : data) ++freqs[b];
    return freqs;
}

}  // namespace lutz
