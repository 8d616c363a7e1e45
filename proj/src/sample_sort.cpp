#include "smallsort/sample_sort.hpp"

namespace smallsort {

void SampleSortConfig::validate() const {
    if (splitter_count != 3)
        throw ParameterError("only three splitters are supported, got " +
                             std::to_string(splitter_count));
    if (oversampling < 1) throw ParameterError("oversampling factor must be at least 1");
    if (block_size < 1 || block_size > 5)
        throw ParameterError("block size must be in [1,5], got " + std::to_string(block_size));
}

SampleSortConfig parse_sample_sort_config(std::string_view text) {
    const std::string original(text);
    if (!text.empty() && text.front() == '-') text.remove_prefix(1);
    if (!text.empty() && (text.front() == 'S' || text.front() == 's')) text.remove_prefix(1);
    if (text.size() != 3 || !std::all_of(text.begin(), text.end(),
                                         [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("sample sort config must be three digits xyz, got '" + original + "'");
    }
    SampleSortConfig cfg;
    cfg.splitter_count = static_cast<std::size_t>(text[0] - '0');
    cfg.oversampling = static_cast<std::size_t>(text[1] - '0');
    cfg.block_size = static_cast<std::size_t>(text[2] - '0');
    cfg.validate();
    return cfg;
}

std::string sample_sort_config_code(const SampleSortConfig& cfg) {
    return std::to_string(cfg.splitter_count) + std::to_string(cfg.oversampling) +
           std::to_string(cfg.block_size);
}

void sample_sort(std::span<Element> data, const SampleSortConfig& cfg,
                 const SmallSorterChoice& base_sorter) {
    dispatch_small_sorter(base_sorter, [&](auto sorter) { sample_sort(data, cfg, sorter); });
}

} // namespace smallsort
