#include "extremal/partition.hpp"

#include "extremal/errors.hpp"

namespace extremal {

VertexPartition::VertexPartition(Vertex n, const std::vector<std::vector<Vertex>>& groups)
    : vprev_(n, -1), vnext_(n, -1), vgroup_(n, -1) {
    for (const auto& members : groups) {
        if (members.empty()) continue;
        int gid = new_group();
        link_group_after(gid, glast_);
        for (Vertex v : members) append_vertex(gid, v);
    }
}

int VertexPartition::new_group() {
    int gid;
    if (!free_groups_.empty()) {
        gid = free_groups_.back();
        free_groups_.pop_back();
        groups_[gid] = Group{};
    } else {
        gid = static_cast<int>(groups_.size());
        groups_.emplace_back();
    }
    ++group_count_;
    ++ops_;
    return gid;
}

void VertexPartition::link_group_before(int gid, int anchor) {
    Group& g = groups_[gid];
    Group& a = groups_[anchor];
    g.next = anchor;
    g.prev = a.prev;
    if (a.prev >= 0)
        groups_[a.prev].next = gid;
    else
        gfirst_ = gid;
    a.prev = gid;
}

void VertexPartition::link_group_after(int gid, int anchor) {
    Group& g = groups_[gid];
    if (anchor < 0) {
        g.prev = -1;
        g.next = gfirst_;
        if (gfirst_ >= 0) groups_[gfirst_].prev = gid;
        gfirst_ = gid;
        if (glast_ < 0) glast_ = gid;
        return;
    }
    Group& a = groups_[anchor];
    g.prev = anchor;
    g.next = a.next;
    if (a.next >= 0)
        groups_[a.next].prev = gid;
    else
        glast_ = gid;
    a.next = gid;
}

void VertexPartition::unlink_group(int gid) {
    Group& g = groups_[gid];
    if (g.prev >= 0)
        groups_[g.prev].next = g.next;
    else
        gfirst_ = g.next;
    if (g.next >= 0)
        groups_[g.next].prev = g.prev;
    else
        glast_ = g.prev;
    --group_count_;
    ++ops_;
    free_groups_.push_back(gid);
}

void VertexPartition::detach_vertex(Vertex v) {
    int gid = vgroup_[v];
    Group& g = groups_[gid];
    if (vprev_[v] >= 0)
        vnext_[vprev_[v]] = vnext_[v];
    else
        g.head = vnext_[v];
    if (vnext_[v] >= 0)
        vprev_[vnext_[v]] = vprev_[v];
    else
        g.tail = vprev_[v];
    --g.size;
    --size_;
    vgroup_[v] = -1;
    ++ops_;
    if (g.size == 0) unlink_group(gid);
}

void VertexPartition::append_vertex(int gid, Vertex v) {
    Group& g = groups_[gid];
    vgroup_[v] = gid;
    vprev_[v] = g.tail;
    vnext_[v] = -1;
    if (g.tail >= 0)
        vnext_[g.tail] = v;
    else
        g.head = v;
    g.tail = v;
    ++g.size;
    ++size_;
    ++ops_;
}

Vertex VertexPartition::front_vertex() const {
    if (gfirst_ < 0) throw contract_error("front_vertex on empty partition");
    return groups_[gfirst_].head;
}

void VertexPartition::remove(Vertex v) {
    if (vgroup_[v] < 0) throw contract_error("remove: vertex not in partition");
    detach_vertex(v);
}

void VertexPartition::move_to_front_sibling(Vertex v, int round) {
    int gid = vgroup_[v];
    if (gid < 0) throw contract_error("move_to_front_sibling: vertex not in partition");
    if (groups_[gid].round != round || groups_[gid].front_sibling < 0) {
        int sib = new_group();  // may reallocate groups_
        link_group_before(sib, gid);
        groups_[gid].round = round;
        groups_[gid].front_sibling = sib;
    }
    int sib = groups_[gid].front_sibling;
    detach_vertex(v);
    append_vertex(sib, v);
}

void VertexPartition::move_to_counted_sibling(Vertex v, int count, int round) {
    int gid = vgroup_[v];
    if (gid < 0) throw contract_error("move_to_counted_sibling: vertex not in partition");
    if (groups_[gid].round != round) {
        groups_[gid].round = round;
        groups_[gid].front_sibling = -1;
        groups_[gid].counted.clear();
    }
    // Siblings sit after the parent group, ascending by count.
    int sib = -1;
    int anchor = gid;
    std::size_t pos = 0;
    for (; pos < groups_[gid].counted.size(); ++pos) {
        if (groups_[gid].counted[pos].first == count) {
            sib = groups_[gid].counted[pos].second;
            break;
        }
        if (groups_[gid].counted[pos].first > count) break;
        anchor = groups_[gid].counted[pos].second;
        ++ops_;
    }
    if (sib < 0) {
        sib = new_group();  // may reallocate groups_
        link_group_after(sib, anchor);
        auto& counted = groups_[gid].counted;
        counted.insert(counted.begin() + pos, {count, sib});
    }
    detach_vertex(v);
    append_vertex(sib, v);
    // The parent may have emptied; its counted siblings stay linked in place.
}

std::vector<Vertex> VertexPartition::group_members(int gid) const {
    std::vector<Vertex> out;
    out.reserve(groups_[gid].size);
    for (Vertex v = groups_[gid].head; v >= 0; v = vnext_[v]) out.push_back(v);
    return out;
}

} // namespace extremal
