# Compiled twin of _kernels_py; same signatures, word-sized arithmetic.
# Callers guarantee the results fit in 64 bits (n <= 57 for the distances,
# n <= 9 in practice for the sweep).

BACKEND_NAME = "c"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define pbca_popcountll(x) __builtin_popcountll(x)
    #else
    static int pbca_popcountll(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int pbca_popcountll(unsigned long long x) nogil


cdef int MAXN = 64


def fast_distance(int n, up_p, up_q):
    cdef unsigned long long a[64]
    cdef unsigned long long b[64]
    cdef long long total = 0
    cdef int x, alpha
    for x in range(n):
        a[x] = up_p[x]
        b[x] = up_q[x]
    with nogil:
        for x in range(n):
            alpha = n - 1 - pbca_popcountll(a[x] | b[x])
            total += (1ULL << (n - pbca_popcountll(b[x]) - 1))
            total += (1ULL << (n - pbca_popcountll(a[x]) - 1))
            total -= (2ULL << alpha)
    return total


def direct_distance(int n, up_p, up_q):
    cdef unsigned long long a[64]
    cdef unsigned long long b[64]
    cdef unsigned long long full = (1ULL << n) - 1
    cdef unsigned long long rest, t, ua, ub
    cdef long long total = 0
    cdef int x
    cdef bint ina, inb
    for x in range(n):
        a[x] = up_p[x]
        b[x] = up_q[x]
    with nogil:
        for x in range(n):
            ua = a[x]
            ub = b[x]
            rest = full & ~(1ULL << x)
            t = 0
            while True:
                ina = (t & ua) == 0
                inb = (t & ub) == 0
                if ina != inb:
                    total += 1
                if t == rest:
                    break
                t = (t - rest) & rest
    return total


cdef struct SweepCtx:
    int n
    unsigned long long up[64]
    unsigned long long stack[64]
    long long best
    bint have_best


cdef long long _block_contrib(SweepCtx *ctx, unsigned long long block,
                              unsigned long long above, long long t1) nogil:
    cdef long long contrib = 0
    cdef int x
    cdef int n = ctx.n
    while block:
        x = pbca_popcountll((block & (0 - block)) - 1)
        block &= block - 1
        contrib += t1 - (2LL << (n - 1 - pbca_popcountll(ctx.up[x] | above)))
    return contrib


cdef void _sweep_rec(SweepCtx *ctx, unsigned long long remaining,
                     unsigned long long above, long long partial,
                     long long const, int depth, list out):
    cdef unsigned long long s
    cdef long long d, contrib, t1
    cdef int i
    if remaining == 0:
        d = const + partial
        if (not ctx.have_best) or d < ctx.best:
            ctx.best = d
            ctx.have_best = True
            del out[:]
            out.append(tuple([ctx.stack[i] for i in range(depth)]))
        elif d == ctx.best:
            out.append(tuple([ctx.stack[i] for i in range(depth)]))
        return
    t1 = 1LL << (ctx.n - pbca_popcountll(above) - 1)
    s = (0 - remaining) & remaining
    while True:
        contrib = _block_contrib(ctx, s, above, t1)
        ctx.stack[depth] = s
        _sweep_rec(ctx, remaining & ~s, above | s, partial + contrib,
                   const, depth + 1, out)
        s = (s - remaining) & remaining
        if s == 0:
            break


def sweep_min_distance(int n, up_base):
    cdef SweepCtx ctx
    cdef long long const = 0
    cdef int x
    ctx.n = n
    ctx.have_best = False
    ctx.best = 0
    for x in range(n):
        ctx.up[x] = up_base[x]
        const += 1LL << (n - pbca_popcountll(ctx.up[x]) - 1)
    out: list = []
    _sweep_rec(&ctx, (1ULL << n) - 1, 0, 0, const, 0, out)
    return ctx.best, out
