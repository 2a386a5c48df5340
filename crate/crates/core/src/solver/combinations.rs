/// Lexicographic `r`-subsets of `0..n`, yielded as sorted index slices.
///
/// A non-zero `fixed` pins the first `fixed` entries of the starting subset,
/// which restricts the walk to one block of the lexicographic order.
#[derive(Debug, Clone)]
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    fixed: usize,
    started: bool,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, r: usize) -> Self {
        Combinations {
            n,
            idx: (0..r).collect(),
            fixed: 0,
            started: false,
            done: r > n,
        }
    }

    /// Subsets whose smallest element is `first`.
    pub(crate) fn starting_with(n: usize, r: usize, first: usize) -> Self {
        assert!(r >= 1);
        Combinations {
            n,
            idx: (first..first + r).collect(),
            fixed: 1,
            started: false,
            done: first + r > n,
        }
    }

    /// Advances to the next subset, returning it, or `None` when exhausted.
    pub(crate) fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let r = self.idx.len();
        let mut i = r;
        while i > self.fixed {
            i -= 1;
            if self.idx[i] < self.n - r + i {
                self.idx[i] += 1;
                for j in i + 1..r {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}

/// `C(n, r)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
