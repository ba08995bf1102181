# cython: boundscheck=False, wraparound=False
"""Compiled automata kernels.

Same contract as ``py_backend`` (see there for the documentation); this
version keeps the partition refinement and the breadth-first walks on flat C
int arrays.
"""

from cpython cimport array

import array

cdef array.array _INT = array.array('i', [])

NAME = "c"


def bfs_order(int n_states, int n_letters, delta, int source):
    cdef array.array d_arr = array.array('i', delta)
    cdef int[::1] d = d_arr
    cdef array.array order_arr = array.clone(_INT, n_states, zero=False)
    cdef int[::1] order = order_arr
    cdef array.array seen_arr = array.clone(_INT, n_states, zero=True)
    cdef int[::1] seen = seen_arr
    cdef int head = 0, count = 1, q, c, t, base
    order[0] = source
    seen[source] = 1
    while head < count:
        q = order[head]
        head += 1
        base = q * n_letters
        for c in range(n_letters):
            t = d[base + c]
            if not seen[t]:
                seen[t] = 1
                order[count] = t
                count += 1
    return [order[i] for i in range(count)]


def run_word(int n_letters, delta, int state, letters):
    cdef array.array d_arr = array.array('i', delta)
    cdef int[::1] d = d_arr
    cdef int c
    for c in letters:
        state = d[state * n_letters + c]
    return state


def minimize_blocks(int n_states, int n_letters, delta, classes):
    cdef array.array d_arr = array.array('i', delta)
    cdef int[::1] d = d_arr

    # Dense int ids for the (arbitrary hashable) class labels.
    cdef dict cls_ids = {}
    cdef array.array cls_arr = array.clone(_INT, n_states, zero=False)
    cdef int[::1] cls = cls_arr
    cdef int q
    for q in range(n_states):
        cls[q] = cls_ids.setdefault(classes[q], len(cls_ids))
    cdef int n_classes = len(cls_ids)

    cdef array.array blk_arr = array.clone(_INT, n_states, zero=False)
    cdef int[::1] blk = blk_arr
    if n_classes <= 1:
        for q in range(n_states):
            blk[q] = 0
        return [blk[i] for i in range(n_states)]

    # Initial partition: elems grouped by class, block boundaries in first/past.
    cdef array.array elems_arr = array.clone(_INT, n_states, zero=False)
    cdef int[::1] elems = elems_arr
    cdef array.array loc_arr = array.clone(_INT, n_states, zero=False)
    cdef int[::1] loc = loc_arr
    cdef array.array first_arr = array.clone(_INT, n_states + 1, zero=True)
    cdef int[::1] first = first_arr
    cdef array.array past_arr = array.clone(_INT, n_states + 1, zero=True)
    cdef int[::1] past = past_arr

    cdef array.array fill_arr = array.clone(_INT, n_classes + 1, zero=True)
    cdef int[::1] fill = fill_arr
    for q in range(n_states):
        fill[cls[q] + 1] += 1
    cdef int b
    for b in range(n_classes):
        fill[b + 1] += fill[b]
        first[b] = fill[b]
        past[b] = fill[b + 1]
    cdef int pos
    for q in range(n_states):
        b = cls[q]
        pos = fill[b]
        fill[b] = pos + 1
        elems[pos] = q
        loc[q] = pos
        blk[q] = b
    cdef int n_blocks = n_classes

    # Reverse transitions in CSR layout, segmented per letter.
    cdef Py_ssize_t cells = <Py_ssize_t> n_states * n_letters
    cdef array.array roff_arr = array.clone(_INT, cells + 1, zero=True)
    cdef int[::1] roff = roff_arr
    cdef array.array rdat_arr = array.clone(_INT, cells, zero=False)
    cdef int[::1] rdat = rdat_arr
    cdef int c, t
    cdef Py_ssize_t base, i
    for q in range(n_states):
        base = <Py_ssize_t> q * n_letters
        for c in range(n_letters):
            roff[<Py_ssize_t> c * n_states + d[base + c] + 1] += 1
    for i in range(cells):
        roff[i + 1] += roff[i]
    cdef array.array rfill_arr = array.clone(_INT, cells, zero=False)
    cdef int[::1] rfill = rfill_arr
    for i in range(cells):
        rfill[i] = roff[i]
    for q in range(n_states):
        base = <Py_ssize_t> q * n_letters
        for c in range(n_letters):
            i = <Py_ssize_t> c * n_states + d[base + c]
            rdat[rfill[i]] = q
            rfill[i] += 1

    # Worklist (LIFO), marked counters, scratch buffers.
    cdef array.array work_arr = array.clone(_INT, n_states + 1, zero=False)
    cdef int[::1] work = work_arr
    cdef array.array inw_arr = array.clone(_INT, n_states + 1, zero=True)
    cdef int[::1] in_work = inw_arr
    cdef array.array counter_arr = array.clone(_INT, n_states + 1, zero=True)
    cdef int[::1] counter = counter_arr
    cdef array.array split_arr = array.clone(_INT, n_states, zero=False)
    cdef int[::1] splitter = split_arr
    cdef array.array touched_arr = array.clone(_INT, n_states + 1, zero=False)
    cdef int[::1] touched = touched_arr

    cdef int n_work = 0, largest = 0, size
    for b in range(n_blocks):
        if past[b] - first[b] > past[largest] - first[largest]:
            largest = b
    for b in range(n_blocks):
        if b != largest:
            work[n_work] = b
            n_work += 1
            in_work[b] = 1

    cdef int n_split, n_touched, s, p, tb, cnt, dest, other, z, smaller
    cdef Py_ssize_t j, seg
    while n_work > 0:
        n_work -= 1
        b = work[n_work]
        in_work[b] = 0
        n_split = past[b] - first[b]
        for i in range(n_split):
            splitter[i] = elems[first[b] + i]
        for c in range(n_letters):
            seg = <Py_ssize_t> c * n_states
            n_touched = 0
            for i in range(n_split):
                s = splitter[i]
                for j in range(roff[seg + s], roff[seg + s + 1]):
                    p = rdat[j]
                    tb = blk[p]
                    cnt = counter[tb]
                    if cnt == 0:
                        touched[n_touched] = tb
                        n_touched += 1
                    dest = first[tb] + cnt
                    pos = loc[p]
                    other = elems[dest]
                    elems[dest] = p
                    elems[pos] = other
                    loc[p] = dest
                    loc[other] = pos
                    counter[tb] = cnt + 1
            for i in range(n_touched):
                tb = touched[i]
                cnt = counter[tb]
                counter[tb] = 0
                size = past[tb] - first[tb]
                if cnt == size:
                    continue
                z = n_blocks
                n_blocks += 1
                first[z] = first[tb]
                past[z] = first[tb] + cnt
                first[tb] = first[tb] + cnt
                for j in range(first[z], past[z]):
                    blk[elems[j]] = z
                if in_work[tb]:
                    work[n_work] = z
                    n_work += 1
                    in_work[z] = 1
                else:
                    smaller = z if cnt <= size - cnt else tb
                    work[n_work] = smaller
                    n_work += 1
                    in_work[smaller] = 1
                    if smaller != z:
                        in_work[z] = 0

    return [blk[i] for i in range(n_states)]


def find_distinguisher(int n_letters, delta_a, classes_a, int src_a,
                       delta_b, classes_b, int src_b):
    cdef array.array da_arr = array.array('i', delta_a)
    cdef int[::1] da = da_arr
    cdef array.array db_arr = array.array('i', delta_b)
    cdef int[::1] db = db_arr

    cdef dict cls_ids = {}
    cdef array.array ca_arr = array.clone(_INT, len(classes_a), zero=False)
    cdef int[::1] ca = ca_arr
    cdef array.array cb_arr = array.clone(_INT, len(classes_b), zero=False)
    cdef int[::1] cb = cb_arr
    cdef Py_ssize_t i
    for i in range(len(classes_a)):
        ca[i] = cls_ids.setdefault(classes_a[i], len(cls_ids))
    for i in range(len(classes_b)):
        cb[i] = cls_ids.setdefault(classes_b[i], len(cls_ids))

    if ca[src_a] != cb[src_b]:
        return []

    cdef long long nb = len(classes_b)
    cdef long long start = (<long long> src_a) * nb + src_b
    cdef dict parent = {start: None}
    cdef list queue = [start]
    cdef Py_ssize_t head = 0
    cdef long long key, fol
    cdef int p, q, c
    while head < len(queue):
        key = queue[head]
        head += 1
        p = <int> (key // nb)
        q = <int> (key % nb)
        for c in range(n_letters):
            fol = (<long long> da[p * n_letters + c]) * nb + db[q * n_letters + c]
            if fol in parent:
                continue
            parent[fol] = (key, c)
            if ca[<int> (fol // nb)] != cb[<int> (fol % nb)]:
                word = [c]
                node = parent[key]
                while node is not None:
                    word.append(node[1])
                    node = parent[node[0]]
                word.reverse()
                return word
            queue.append(fol)
    return None
