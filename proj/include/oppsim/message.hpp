#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace oppsim {

// Immutable per-message facts, shared by every copy. seq is the creation
// ordinal (1-based) and doubles as the numeric part of the id "M<seq>".
struct MessageMeta {
    uint32_t seq = 0;
    std::string id;
    int source = -1;
    int destination = -1;
    double size = 0;       // bytes
    double created_at = 0; // sim-s
};

// One buffered replica. hops always equals path.size() - 1; the path lists
// every host this particular copy travelled through, source first.
struct Copy {
    uint32_t seq = 0;
    int hops = 0;
    double received_at = 0;
    std::vector<uint16_t> path;
};

// Byte-capacity buffer holding at most one copy per message id.
class MessageBuffer {
public:
    explicit MessageBuffer(double capacity) : capacity_(capacity) {}

    bool has(uint32_t seq) const { return index_.count(seq) != 0; }
    const Copy* find(uint32_t seq) const;
    double capacity() const { return capacity_; }
    double used() const { return used_; }
    size_t count() const { return copies_.size(); }
    const std::vector<Copy>& copies() const { return copies_; }

    void insert(Copy copy, double size);
    // Removes and returns the copy; throws std::logic_error when absent.
    Copy remove(uint32_t seq, double size);

private:
    double capacity_;
    double used_ = 0;
    std::vector<Copy> copies_;
    std::unordered_map<uint32_t, size_t> index_;
};

} // namespace oppsim
