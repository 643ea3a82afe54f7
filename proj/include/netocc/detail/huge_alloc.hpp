#pragma once

// Allocator for large, randomly accessed arrays: big blocks are 2 MiB aligned
// and advised for transparent huge pages, which cuts TLB misses on long texts.

#include <cstddef>
#include <cstdlib>
#include <new>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace netocc::detail {

template <class T>
struct HugeAlloc {
    using value_type = T;
    static constexpr std::size_t kHuge = std::size_t{2} << 20;

    HugeAlloc() = default;
    template <class U>
    HugeAlloc(const HugeAlloc<U>&) {}

    T* allocate(std::size_t n) {
        std::size_t bytes = n * sizeof(T);
        void* p = nullptr;
        if (bytes >= 2 * kHuge) {
            bytes = (bytes + kHuge - 1) / kHuge * kHuge;
            p = std::aligned_alloc(kHuge, bytes);
#if defined(__linux__) && defined(MADV_HUGEPAGE)
            if (p) madvise(p, bytes, MADV_HUGEPAGE);
#endif
        } else {
            p = std::malloc(bytes ? bytes : 1);
        }
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }

    template <class U>
    bool operator==(const HugeAlloc<U>&) const { return true; }
};

}  // namespace netocc::detail
