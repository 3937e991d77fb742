#include "stabreg/limits.hpp"

#include "stabreg/errors.hpp"

#include <cstdlib>
#include <string>

namespace stabreg {

namespace {

void read_bound(const char* name, std::size_t& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    try {
        std::size_t used = 0;
        const unsigned long long value = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        target = static_cast<std::size_t>(value);
    } catch (const std::exception&) {
        throw InputError(std::string("environment variable ") + name + " is not a nonnegative integer");
    }
}

}  // namespace

Limits Limits::from_environment() {
    Limits limits;
    read_bound("STABREG_EXHAUSTIVE_MAX", limits.exhaustive_max);
    read_bound("STABREG_EXACT_PARTITION_MAX", limits.exact_partition_max);
    read_bound("STABREG_GROUP_MAX", limits.group_max);
    return limits;
}

}  // namespace stabreg
