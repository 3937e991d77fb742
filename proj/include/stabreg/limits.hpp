#pragma once

#include <cstddef>

namespace stabreg {

/// Size bounds for the exhaustive searches. The CLI reads overrides from
/// STABREG_EXHAUSTIVE_MAX, STABREG_EXACT_PARTITION_MAX and STABREG_GROUP_MAX.
struct Limits {
    std::size_t exhaustive_max = 14;       // is_excellent over all subsets
    std::size_t exact_partition_max = 12;  // exact good-partition enumeration
    std::size_t group_max = 128;           // subgroup enumeration

    static Limits from_environment();
};

}  // namespace stabreg
