#pragma once

#include <cstdint>
#include <vector>

#include "extremal/vertex_set.hpp"

namespace extremal {

// Ordered partition of a vertex subset with doubly-linked groups and
// doubly-linked members, the standard partition-refinement structure.
// Splitting moves one vertex at a time into a per-round sibling group,
// so refining by a pivot set costs O(|pivot|) amortized.
//
// Members keep their relative order under every operation. Feeding
// vertices in ascending id order therefore keeps every group ascending,
// which is how LexBFS gets its deterministic smallest-id tie-break for
// free: the front vertex of the front group is the pick.
class VertexPartition {
public:
    VertexPartition(Vertex n, const std::vector<std::vector<Vertex>>& groups);

    bool empty() const { return size_ == 0; }
    int size() const { return size_; }
    bool contains(Vertex v) const { return vgroup_[v] >= 0; }

    Vertex front_vertex() const;
    void remove(Vertex v);

    // Moves v into the sibling group created for `round` directly BEFORE
    // v's current group. Used where hits outrank misses (LexBFS labels).
    void move_to_front_sibling(Vertex v, int round);

    // Moves v into the sibling group keyed by (round, count), placed after
    // v's current group with siblings ordered by ascending count. Used for
    // orderings that sort by per-pivot-set multiplicities.
    void move_to_counted_sibling(Vertex v, int count, int round);

    int group_of(Vertex v) const { return vgroup_[v]; }
    int group_size(int gid) const { return groups_[gid].size; }
    int group_count() const { return group_count_; }
    int first_group() const { return gfirst_; }
    int next_group(int gid) const { return groups_[gid].next; }
    std::vector<Vertex> group_members(int gid) const;

    // Vertices plus links touched so far; lets callers assert linearity.
    std::int64_t ops() const { return ops_; }

private:
    struct Group {
        Vertex head = -1, tail = -1;
        int size = 0;
        int prev = -1, next = -1;
        int round = -1;      // last round that created a sibling for this group
        int front_sibling = -1;
        std::vector<std::pair<int, int>> counted;  // (count, group id) ascending
    };

    int new_group();
    void link_group_before(int gid, int anchor);
    void link_group_after(int gid, int anchor);
    void unlink_group(int gid);
    void detach_vertex(Vertex v);
    void append_vertex(int gid, Vertex v);

    std::vector<Vertex> vprev_, vnext_;
    std::vector<int> vgroup_;
    std::vector<Group> groups_;
    std::vector<int> free_groups_;
    int gfirst_ = -1, glast_ = -1;
    int group_count_ = 0;
    int size_ = 0;
    std::int64_t ops_ = 0;
};

} // namespace extremal
