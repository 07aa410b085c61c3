//! Type A combinatorics: column-strict tableaux, row and column insertion,
//! jeu de taquin, the plactic product, horizontal strips with the Pieri
//! bijections, and the charge statistic.
//!
//! Letters are small positive integers. The charge statistic is the
//! classical index rule on the reading word (rows left to right, bottom row
//! first); its defining recursive properties are enforced by tests rather
//! than assumed.

use crate::error::{Error, Result};
use std::fmt;

/// Weakly decreasing nonnegative integer sequence, trailing zeros removed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(pub Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Invalid(format!("not weakly decreasing: {:?}", parts)));
            }
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Invalid(format!("negative part: {:?}", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// All partitions of n with at most `max_parts` parts.
    pub fn all_of_size(n: i64, max_parts: usize) -> Vec<Partition> {
        fn rec(rem: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            let top = rem.min(max_part);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            out.push(Partition::empty());
            return out;
        }
        rec(n, n, max_parts, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Column-strict tableau: rows weakly increase left to right, columns
/// strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn empty() -> Tableau {
        Tableau { rows: Vec::new() }
    }

    pub fn new(rows: Vec<Vec<u8>>) -> Result<Tableau> {
        let t = Tableau { rows };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::Invalid("empty row in tableau".into()));
            }
            for w in row.windows(2) {
                if w[0] > w[1] {
                    return Err(Error::Invalid(format!("row {} not weakly increasing", r + 1)));
                }
            }
            if r + 1 < self.rows.len() && self.rows[r + 1].len() > row.len() {
                return Err(Error::Invalid("row lengths not weakly decreasing".into()));
            }
        }
        for r in 1..self.rows.len() {
            for c in 0..self.rows[r].len() {
                if self.rows[r][c] <= self.rows[r - 1][c] {
                    return Err(Error::Invalid(format!(
                        "column {} not strictly increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as i64).collect())
    }

    /// Weight vector: entry i counts the letters i+1.
    pub fn weight(&self) -> Vec<i64> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut w = vec![0i64; max];
        for row in &self.rows {
            for &x in row {
                w[(x - 1) as usize] += 1;
            }
        }
        w
    }

    /// Reading word: rows left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<u8> {
        let mut w = Vec::with_capacity(self.size());
        for row in self.rows.iter().rev() {
            w.extend_from_slice(row);
        }
        w
    }

    /// Row insertion `T * x` by bumping; returns the result together with
    /// the bumping path as (row, column, entry) triples ending at the new
    /// box.
    pub fn row_insert(&self, x: u8) -> (Tableau, Vec<(usize, usize, u8)>) {
        let mut rows = self.rows.clone();
        let mut cur = x;
        let mut path = Vec::new();
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![cur]);
                path.push((r, 0, cur));
                break;
            }
            // leftmost entry strictly greater than cur
            match rows[r].iter().position(|&y| y > cur) {
                None => {
                    rows[r].push(cur);
                    path.push((r, rows[r].len() - 1, cur));
                    break;
                }
                Some(c) => {
                    let bumped = rows[r][c];
                    rows[r][c] = cur;
                    path.push((r, c, cur));
                    cur = bumped;
                    r += 1;
                }
            }
        }
        let t = Tableau { rows };
        debug_assert!(t.check().is_ok());
        (t, path)
    }

    /// Column insertion `x * T`: bump down the columns, replacing the
    /// topmost entry >= x.
    pub fn column_insert(&self, x: u8) -> Tableau {
        let mut rows = self.rows.clone();
        let mut cur = x;
        let mut c = 0;
        loop {
            // topmost entry in column c that is >= cur
            let mut hit = None;
            for (r, row) in rows.iter().enumerate() {
                if row.len() > c && row[c] >= cur {
                    hit = Some(r);
                    break;
                }
            }
            match hit {
                None => {
                    // append at the bottom of column c
                    let r = rows.iter().position(|row| row.len() <= c).unwrap_or(rows.len());
                    if r == rows.len() {
                        rows.push(vec![cur]);
                    } else {
                        rows[r].push(cur);
                    }
                    break;
                }
                Some(r) => {
                    let bumped = rows[r][c];
                    rows[r][c] = cur;
                    cur = bumped;
                    c += 1;
                }
            }
        }
        let t = Tableau { rows };
        debug_assert!(t.check().is_ok());
        t
    }

    /// Reverse row bumping starting at an outer corner box; returns the
    /// smaller tableau and the letter that pops out of row 1.
    pub fn uninsert(&self, row: usize, col: usize) -> (Tableau, u8) {
        let mut rows = self.rows.clone();
        assert_eq!(rows[row].len() - 1, col, "uninsertion must start at the end of a row");
        assert!(row + 1 >= rows.len() || rows[row + 1].len() <= col, "not an outer corner");
        let mut cur = rows[row].pop().unwrap();
        if rows[row].is_empty() {
            rows.pop();
        }
        for r in (0..row).rev() {
            // rightmost entry strictly less than cur
            let c = rows[r]
                .iter()
                .rposition(|&y| y < cur)
                .expect("reverse bumping found no smaller entry");
            std::mem::swap(&mut cur, &mut rows[r][c]);
        }
        let t = Tableau { rows };
        debug_assert!(t.check().is_ok());
        (t, cur)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Column-strict filling of a skew shape `outer/inner`; row r holds the
/// entries in columns `inner_r..outer_r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewFilling {
    pub inner: Partition,
    pub rows: Vec<Vec<u8>>,
}

impl SkewFilling {
    pub fn new(inner: Partition, rows: Vec<Vec<u8>>) -> Result<SkewFilling> {
        let s = SkewFilling { inner, rows };
        s.check()?;
        Ok(s)
    }

    pub fn outer(&self) -> Partition {
        Partition(
            self.rows
                .iter()
                .enumerate()
                .map(|(r, row)| self.inner.part(r) + row.len() as i64)
                .collect(),
        )
    }

    fn entry(&self, r: usize, c: i64) -> Option<u8> {
        if r >= self.rows.len() {
            return None;
        }
        let off = c - self.inner.part(r);
        if off < 0 {
            return None;
        }
        self.rows[r].get(off as usize).copied()
    }

    fn check(&self) -> Result<()> {
        let outer = self.outer();
        for r in 0..self.rows.len() {
            if r > 0 && outer.part(r) > outer.part(r - 1) {
                return Err(Error::Invalid("outer shape not a partition".into()));
            }
            if r > 0 && self.inner.part(r) > self.inner.part(r - 1) {
                return Err(Error::Invalid("inner shape not a partition".into()));
            }
            for w in self.rows[r].windows(2) {
                if w[0] > w[1] {
                    return Err(Error::Invalid("skew row not weakly increasing".into()));
                }
            }
            if r > 0 {
                for c in self.inner.part(r)..outer.part(r) {
                    if let (Some(a), Some(b)) = (self.entry(r - 1, c), self.entry(r, c)) {
                        if b <= a {
                            return Err(Error::Invalid("skew column not strictly increasing".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Jeu de taquin rectification. The default slide order takes the inner
    /// corner with the largest row index first; `corner_choice` can permute
    /// the candidates to exercise order independence.
    pub fn rectify(&self, mut corner_choice: impl FnMut(usize) -> usize) -> Tableau {
        let mut inner: Vec<i64> = (0..self.rows.len()).map(|r| self.inner.part(r)).collect();
        // dense grid with Option entries
        let mut grid: Vec<Vec<Option<u8>>> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut g = vec![None; inner[r] as usize];
            g.extend(row.iter().map(|&x| Some(x)));
            grid.push(g);
        }
        loop {
            // inner corners: cells (r, inner_r - 1) that are corners of the
            // inner shape
            let mut corners = Vec::new();
            for r in 0..grid.len() {
                if inner[r] == 0 {
                    continue;
                }
                let below = if r + 1 < grid.len() { inner[r + 1] } else { 0 };
                if below < inner[r] {
                    corners.push(r);
                }
            }
            if corners.is_empty() {
                break;
            }
            // default: largest row index first = position corners.len()-1
            let pick = corner_choice(corners.len()).min(corners.len() - 1);
            let r0 = corners[pick];
            let c0 = (inner[r0] - 1) as usize;
            // slide the hole at (r0, c0) out to the boundary
            let (mut r, mut c) = (r0, c0);
            loop {
                let right = grid[r].get(c + 1).copied().flatten();
                let below = if r + 1 < grid.len() { grid[r + 1].get(c).copied().flatten() } else { None };
                match (right, below) {
                    (None, None) => break,
                    (Some(a), None) => {
                        grid[r][c] = Some(a);
                        grid[r][c + 1] = None;
                        c += 1;
                    }
                    (None, Some(b)) => {
                        grid[r][c] = Some(b);
                        grid[r + 1][c] = None;
                        r += 1;
                    }
                    (Some(a), Some(b)) => {
                        if b <= a {
                            grid[r][c] = Some(b);
                            grid[r + 1][c] = None;
                            r += 1;
                        } else {
                            grid[r][c] = Some(a);
                            grid[r][c + 1] = None;
                            c += 1;
                        }
                    }
                }
            }
            // the hole ended at an outer corner (r, c): remove that cell
            grid[r].truncate(c);
            if grid[r].is_empty() {
                grid.remove(r);
            }
            inner[r0] -= 1;
        }
        let rows: Vec<Vec<u8>> = grid
            .into_iter()
            .filter(|row| !row.is_empty())
            .map(|row| row.into_iter().map(|x| x.expect("hole left inside filling")).collect())
            .collect();
        let t = Tableau { rows };
        t.check().expect("jeu de taquin broke column strictness");
        t
    }
}

/// Plactic product `T1 * T2`: place T2 up-right of T1 and rectify.
pub fn plactic_product(t1: &Tableau, t2: &Tableau) -> Tableau {
    if t1.size() == 0 {
        return t2.clone();
    }
    if t2.size() == 0 {
        return t1.clone();
    }
    let offset = t1.rows[0].len() as i64;
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for row in &t2.rows {
        inner.push(offset);
        rows.push(row.clone());
    }
    for (r, row) in t1.rows.iter().enumerate() {
        inner.push(if r == 0 { 0 } else { 0 });
        rows.push(row.clone());
    }
    // inner shape: offset for the T2 rows, 0 for the T1 rows
    let skew = SkewFilling::new(Partition(inner), rows).expect("stacked product is column strict");
    skew.rectify(|n| n - 1)
}

/// Insert a word letter by letter (row insertion); the weight-preserving
/// monoid homomorphism onto tableaux.
pub fn word_to_tableau(word: &[u8]) -> Tableau {
    let mut t = Tableau::empty();
    for &x in word {
        t = t.row_insert(x).0;
    }
    t
}

pub fn word_weight(word: &[u8]) -> Vec<i64> {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut w = vec![0i64; max];
    for &x in word {
        w[(x - 1) as usize] += 1;
    }
    w
}

/// Partitions lambda such that lambda/gamma is a horizontal strip of
/// length r (`gamma tensor (r)`).
pub fn horizontal_strips(gamma: &Partition, r: i64) -> Vec<Partition> {
    assert!(r >= 0);
    let n = gamma.len() + 1;
    let mut out = Vec::new();
    // lambda_i in [gamma_i, gamma_{i-1}] with sum of additions = r
    fn rec(
        gamma: &Partition,
        i: usize,
        n: usize,
        rem: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        if i == n {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
            }
            return;
        }
        let lo = gamma.part(i);
        let hi = if i == 0 { gamma.part(0) + rem } else { gamma.part(i - 1) };
        for v in lo..=hi.min(lo + rem) {
            // also respect weak decrease with the previous chosen part
            if i > 0 && v > cur[i - 1] {
                break;
            }
            cur.push(v);
            rec(gamma, i + 1, n, rem - (v - lo), cur, out);
            cur.pop();
        }
    }
    rec(gamma, 0, n, r, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Pieri bijection `(T, u) -> T * u`: row-insert the weakly increasing word
/// u; the new boxes form a horizontal strip.
pub fn pieri_insert(t: &Tableau, u: &[u8]) -> Tableau {
    debug_assert!(u.windows(2).all(|w| w[0] <= w[1]), "Pieri word must weakly increase");
    let mut cur = t.clone();
    for &x in u {
        cur = cur.row_insert(x).0;
    }
    cur
}

/// Inverse Pieri bijection: peel the horizontal strip `shape(p)/gamma` by
/// reverse bumping from the rightmost strip box to the leftmost; returns
/// `(T, u)` with `T` of shape gamma and u weakly increasing.
pub fn pieri_uninsert(p: &Tableau, gamma: &Partition) -> (Tableau, Vec<u8>) {
    let outer = p.shape();
    assert!(outer.contains(gamma), "inner shape must be contained");
    // strip boxes sorted by column descending (at most one per column)
    let mut boxes = Vec::new();
    for r in 0..outer.len() {
        for c in gamma.part(r)..outer.part(r) {
            boxes.push((r, c as usize));
        }
    }
    boxes.sort_by_key(|&(_, c)| std::cmp::Reverse(c));
    let mut cur = p.clone();
    let mut letters = Vec::new();
    for &(r, c) in &boxes {
        let (next, x) = cur.uninsert(r, c);
        cur = next;
        letters.push(x);
    }
    letters.reverse();
    debug_assert!(letters.windows(2).all(|w| w[0] <= w[1]));
    (cur, letters)
}

/// All column-strict tableaux of shape lambda and weight mu, built as
/// chains of horizontal strips.
pub fn enumerate_tableaux(lambda: &Partition, mu: &[i64]) -> Vec<Tableau> {
    if lambda.size() != mu.iter().sum::<i64>() {
        return Vec::new();
    }
    // grow from the empty shape by horizontal strips of sizes mu_1, mu_2, ...
    let mut states: Vec<(Partition, Vec<Vec<u8>>)> = vec![(Partition::empty(), Vec::new())];
    for (letter0, &count) in mu.iter().enumerate() {
        let letter = (letter0 + 1) as u8;
        let mut next = Vec::new();
        for (shape, rows) in &states {
            for bigger in horizontal_strips(shape, count) {
                if !lambda.contains(&bigger) {
                    continue;
                }
                let mut new_rows = rows.clone();
                for r in 0..bigger.len() {
                    let add = (bigger.part(r) - shape.part(r)) as usize;
                    if r >= new_rows.len() {
                        new_rows.push(Vec::new());
                    }
                    new_rows[r].extend(std::iter::repeat(letter).take(add));
                }
                next.push((bigger, new_rows));
            }
        }
        states = next;
    }
    states
        .into_iter()
        .filter(|(shape, _)| shape == lambda)
        .map(|(_, rows)| Tableau::new(rows).expect("strip chains are column strict"))
        .collect()
}

/// Charge of a tableau whose weight is a partition after dropping leading
/// zeros (the `B(P)_{>= i}` shift renumbers letters so the minimal one acts
/// as 1), by the classical index statistic on the reading word.
pub fn charge(t: &Tableau) -> Result<i64> {
    let wt = t.weight();
    // locate the shift: leading zeros, then weakly decreasing positives
    let first = wt.iter().position(|&c| c > 0);
    let first = match first {
        None => return Ok(0),
        Some(f) => f,
    };
    let tail = &wt[first..];
    if tail.windows(2).any(|w| w[0] < w[1]) || tail.iter().any(|&c| c == 0 && false) {
        return Err(Error::Invalid(format!("weight {:?} is not a shifted partition", wt)));
    }
    if tail.iter().any(|&c| c == 0) {
        return Err(Error::Invalid(format!("weight {:?} has internal zeros", wt)));
    }
    let word: Vec<u8> = t.reading_word().iter().map(|&x| x - first as u8).collect();
    Ok(charge_of_word(&word))
}

/// Charge of a word with partition weight: repeatedly extract a standard
/// subword by cyclic right-to-left scanning, and sum the indices.
pub fn charge_of_word(word: &[u8]) -> i64 {
    let mut weight = word_weight(word);
    let n = word.len();
    let mut used = vec![false; n];
    let mut total = 0i64;
    while weight.iter().any(|&c| c > 0) {
        let levels = weight.iter().take_while(|&&c| c > 0).count() as u8;
        // extract positions of 1..=levels scanning cyclically leftward
        let mut positions = Vec::with_capacity(levels as usize);
        let mut cursor = n; // scan strictly left of cursor, wrapping
        for letter in 1..=levels {
            let mut found = None;
            // walk leftward from cursor-1, wrapping once
            for step in 1..=n {
                let pos = (cursor + n - step) % n;
                if !used[pos] && word[pos] == letter {
                    found = Some(pos);
                    break;
                }
            }
            let pos = found.expect("letter must occur: weight accounting is off");
            used[pos] = true;
            positions.push(pos);
            cursor = pos;
        }
        // index: index(1) = 0; index(k+1) = index(k) + 1 if position of k+1
        // is strictly right of position of k in the original word
        let mut idx = 0i64;
        for k in 1..positions.len() {
            if positions[k] > positions[k - 1] {
                idx += 1;
            }
            total += idx;
        }
        for letter in 1..=levels {
            weight[(letter - 1) as usize] -= 1;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u8]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn shape_and_weight_accessors() {
        // a 30-box tableau: shp = (9,7,7,4,2,1), wt = (7,6,5,5,3,2,2)
        let displayed = t(&[
            &[1, 1, 1, 1, 1, 1, 1, 2, 2],
            &[2, 2, 2, 2, 3, 3, 4][..],
            &[3, 3, 3, 4, 4, 4, 5][..],
            &[4, 5, 5, 6][..],
            &[6, 7][..],
            &[7][..],
        ]);
        assert_eq!(displayed.shape(), Partition(vec![9, 7, 7, 4, 2, 1]));
        assert_eq!(displayed.weight(), vec![7, 6, 5, 5, 3, 2, 2]);
        // empty tableau
        assert_eq!(Tableau::empty().shape(), Partition::empty());
        assert!(Tableau::empty().weight().is_empty());
        // word weight example
        assert_eq!(
            word_weight(&[3, 2, 1, 4, 5, 6, 6, 5, 3, 2, 2, 1, 1]),
            vec![3, 3, 2, 1, 2, 2]
        );
    }

    #[test]
    fn row_insertion_bumping_path_example() {
        // inserting 1 bumps 2, 3, 4, 6 down the rows, new box in column 1
        let start = t(&[
            &[1, 1, 1, 1, 2, 2],
            &[2, 3, 3, 4][..],
            &[4, 4, 4, 5][..],
            &[6][..],
        ]);
        let (res, path) = start.row_insert(1);
        let entries: Vec<u8> = path.iter().map(|&(_, _, e)| e).collect();
        assert_eq!(entries, vec![1, 2, 3, 4, 6]);
        assert_eq!(path.last().unwrap().1, 0, "new box lands in column 1");
        assert_eq!(res.shape(), Partition(vec![6, 4, 4, 1, 1]));
        // insert into empty
        let (single, _) = Tableau::empty().row_insert(3);
        assert_eq!(single, t(&[&[3]]));
    }

    #[test]
    fn insert_uninsert_roundtrip() {
        let base = t(&[&[1, 2, 2], &[2, 3][..], &[4][..]]);
        for x in 1..=4u8 {
            let (bigger, path) = base.row_insert(x);
            let &(r, c, _) = path.last().unwrap();
            let (back, y) = bigger.uninsert(r, c);
            assert_eq!(back, base);
            assert_eq!(y, x);
        }
    }

    #[test]
    fn jeu_de_taquin_twelve_step_reduction() {
        // an 11-box skew filling whose rectification starts 1,1,1,2,2
        let skew = SkewFilling::new(
            Partition(vec![2, 1, 1]),
            vec![
                vec![1, 1, 2, 2],
                vec![1, 2, 3],
                vec![3, 4, 4],
                vec![2],
            ],
        )
        .unwrap();
        let rect = skew.rectify(|n| n - 1);
        assert_eq!(rect.rows()[0], vec![1, 1, 1, 2, 2]);
        assert_eq!(rect.size(), 11);
        // weight is preserved
        assert_eq!(rect.weight(), vec![3, 4, 2, 2]);
    }

    #[test]
    fn jeu_de_taquin_order_independence() {
        let skew = SkewFilling::new(
            Partition(vec![3, 2]),
            vec![vec![1, 3], vec![2, 2], vec![1, 4], vec![3]],
        )
        .unwrap();
        let base = skew.rectify(|n| n - 1);
        // a few deterministic alternative corner orders
        let choosers: Vec<Box<dyn FnMut(usize) -> usize>> = vec![
            Box::new(|_| 0),
            Box::new(|n| n / 2),
            Box::new(|n| if n > 1 { 1 } else { 0 }),
        ];
        for mut ch in choosers {
            assert_eq!(skew.rectify(|n| ch(n)), base);
        }
    }

    #[test]
    fn plactic_product_against_insertions() {
        // x * T is column insertion, T * x is row insertion
        let tt = t(&[&[1, 2], &[3][..]]);
        for x in 1..=4u8 {
            let single = t(&[&[x]]);
            assert_eq!(plactic_product(&tt, &single), tt.row_insert(x).0, "T * {}", x);
            assert_eq!(plactic_product(&single, &tt), tt.column_insert(x), "{} * T", x);
        }
        // identity element
        assert_eq!(plactic_product(&tt, &Tableau::empty()), tt);
        assert_eq!(plactic_product(&Tableau::empty(), &tt), tt);
    }

    #[test]
    fn insertion_is_monoid_homomorphism() {
        // word_to_tableau(w1 w2) = word_to_tableau(w1) * word_to_tableau(w2)
        let words: Vec<Vec<u8>> = vec![
            vec![2, 1, 3],
            vec![1, 1, 2],
            vec![3, 2],
            vec![4, 1, 2, 2],
            vec![2],
        ];
        for w1 in &words {
            for w2 in &words {
                let mut cat = w1.clone();
                cat.extend_from_slice(w2);
                assert_eq!(
                    word_to_tableau(&cat),
                    plactic_product(&word_to_tableau(w1), &word_to_tableau(w2))
                );
                assert_eq!(word_weight(&cat), {
                    let mut a = word_weight(w1);
                    let b = word_weight(w2);
                    if b.len() > a.len() {
                        a.resize(b.len(), 0);
                    }
                    for (i, &v) in b.iter().enumerate() {
                        a[i] += v;
                    }
                    a
                });
            }
        }
    }

    #[test]
    fn horizontal_strip_enumeration() {
        assert_eq!(horizontal_strips(&Partition::empty(), 0), vec![Partition::empty()]);
        assert_eq!(
            horizontal_strips(&Partition(vec![1]), 1),
            vec![Partition(vec![1, 1]), Partition(vec![2])]
        );
        let g = Partition(vec![3, 1]);
        for lam in horizontal_strips(&g, 2) {
            assert!(lam.contains(&g));
            // at most one box per column
            for c in 0..lam.part(0) {
                let col_lam = (0..lam.len()).filter(|&r| lam.part(r) > c).count() as i64;
                let col_g = (0..g.len()).filter(|&r| g.part(r) > c).count() as i64;
                assert!(col_lam - col_g <= 1);
            }
        }
    }

    #[test]
    fn horizontal_strip_of_length_eleven() {
        // a strip spread over three rows, as in the displayed example
        let gamma = Partition(vec![10, 8, 7, 3, 2, 1]);
        let lam = Partition(vec![16, 8, 7, 7, 2, 2]);
        let strip_len = lam.size() - gamma.size();
        assert_eq!(strip_len, 11);
        assert!(horizontal_strips(&gamma, 11).contains(&lam));
    }

    #[test]
    fn pieri_roundtrip() {
        let base = t(&[&[1, 1, 2], &[2, 3][..]]);
        let u = vec![1u8, 2, 2, 4];
        let p = pieri_insert(&base, &u);
        let gamma = base.shape();
        let (back, letters) = pieri_uninsert(&p, &gamma);
        assert_eq!(back, base);
        assert_eq!(letters, u);
        // r = 0 trivial case
        let p0 = pieri_insert(&base, &[]);
        assert_eq!(p0, base);
    }

    #[test]
    fn tableau_enumeration_counts() {
        // B(lambda)_lambda has one element
        let lam = Partition(vec![3, 2]);
        assert_eq!(enumerate_tableaux(&lam, &[3, 2]).len(), 1);
        // B((2,1))_{(1,1,1)} has two
        let ts = enumerate_tableaux(&Partition(vec![2, 1]), &[1, 1, 1]);
        assert_eq!(ts.len(), 2);
        // B((n))_{(1^n)} is the single row
        assert_eq!(enumerate_tableaux(&Partition(vec![4]), &[1, 1, 1, 1]).len(), 1);
        // weight mismatch gives nothing
        assert!(enumerate_tableaux(&lam, &[3, 3]).is_empty());
    }

    #[test]
    fn charge_examples() {
        // superstandard tableau has charge 0
        let sst = t(&[&[1, 1, 1], &[2, 2][..], &[3][..]]);
        assert_eq!(charge(&sst).unwrap(), 0);
        // shape (2), weight (1,1): charge 1
        assert_eq!(charge(&t(&[&[1, 2]])).unwrap(), 1);
        // shape (2,1), weight (1,1,1): charges {1, 2}
        let ts = enumerate_tableaux(&Partition(vec![2, 1]), &[1, 1, 1]);
        let mut charges: Vec<i64> = ts.iter().map(|x| charge(x).unwrap()).collect();
        charges.sort_unstable();
        assert_eq!(charges, vec![1, 2]);
        // shifted alphabet: minimal letter 2 acts like 1
        let shifted = t(&[&[2, 3]]);
        assert_eq!(charge(&shifted).unwrap(), 1);
        // non-partition weight rejected
        let bad = t(&[&[1, 2, 2]]);
        assert!(charge(&bad).is_err());
    }

    #[test]
    fn charge_word_multiplicity_case() {
        // reading word 2 1 1 2 of the unique (3,1)-tableau of weight (2,2)
        assert_eq!(charge_of_word(&[2, 1, 1, 2]), 1);
        // (2,2) tableaux of weight (1,1,1,1): charges 2 and 4
        let ts = enumerate_tableaux(&Partition(vec![2, 2]), &[1, 1, 1, 1]);
        let mut charges: Vec<i64> = ts.iter().map(|x| charge(x).unwrap()).collect();
        charges.sort_unstable();
        assert_eq!(charges, vec![2, 4]);
    }
}
