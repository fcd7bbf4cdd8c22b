//! Suffix array construction by induced sorting (SA-IS).

const EMPTY: usize = usize::MAX;

/// Suffix array of a sentinel-terminated text (the last byte must be the
/// unique smallest symbol). Runs in linear time.
pub fn build_sa(text: &[u8]) -> Vec<usize> {
    assert!(
        text.last() == Some(&0) && text[..text.len() - 1].iter().all(|&c| c != 0),
        "text must end with a unique 0 sentinel"
    );
    let s: Vec<u32> = text.iter().map(|&c| c as u32).collect();
    sais(&s, 256)
}

fn bucket_heads(counts: &[usize]) -> Vec<usize> {
    let mut sum = 0;
    counts
        .iter()
        .map(|&c| {
            let h = sum;
            sum += c;
            h
        })
        .collect()
}

fn bucket_tails(counts: &[usize]) -> Vec<usize> {
    let mut sum = 0;
    counts
        .iter()
        .map(|&c| {
            sum += c;
            sum
        })
        .collect()
}

fn induce(s: &[u32], stype: &[bool], counts: &[usize], sa: &mut [usize]) {
    let n = s.len();
    let mut heads = bucket_heads(counts);
    for i in 0..n {
        let p = sa[i];
        if p != EMPTY && p > 0 && !stype[p - 1] {
            let c = s[p - 1] as usize;
            sa[heads[c]] = p - 1;
            heads[c] += 1;
        }
    }
    let mut tails = bucket_tails(counts);
    for i in (0..n).rev() {
        let p = sa[i];
        if p != EMPTY && p > 0 && stype[p - 1] {
            let c = s[p - 1] as usize;
            tails[c] -= 1;
            sa[tails[c]] = p - 1;
        }
    }
}

fn sais(s: &[u32], k: usize) -> Vec<usize> {
    let n = s.len();
    if n == 1 {
        return vec![0];
    }
    let mut stype = vec![false; n];
    stype[n - 1] = true;
    for i in (0..n - 1).rev() {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];

    let mut counts = vec![0usize; k];
    for &c in s {
        counts[c as usize] += 1;
    }

    let mut sa = vec![EMPTY; n];
    let mut tails = bucket_tails(&counts);
    for i in (1..n).rev() {
        if is_lms(i) {
            let c = s[i] as usize;
            tails[c] -= 1;
            sa[tails[c]] = i;
        }
    }
    induce(s, &stype, &counts, &mut sa);

    // sorted LMS positions, compacted to the front
    let mut m = 0;
    for i in 0..n {
        if is_lms(sa[i]) {
            sa[m] = sa[i];
            m += 1;
        }
    }
    for x in sa[m..].iter_mut() {
        *x = EMPTY;
    }

    // name LMS substrings; names stored at m + pos/2
    let mut name = 0usize;
    let mut prev = EMPTY;
    for i in 0..m {
        let pos = sa[i];
        let differs = prev == EMPTY || lms_substrings_differ(s, &stype, prev, pos);
        if differs {
            name += 1;
            prev = pos;
        }
        sa[m + pos / 2] = name - 1;
    }

    let mut lms_positions = Vec::with_capacity(m);
    let mut reduced = Vec::with_capacity(m);
    for i in 1..n {
        if is_lms(i) {
            lms_positions.push(i);
            reduced.push(sa[m + i / 2] as u32);
        }
    }

    let sorted_lms: Vec<usize> = if name < m {
        sais(&reduced, name).into_iter().map(|r| lms_positions[r]).collect()
    } else {
        let mut order = vec![0usize; m];
        for (r, &nm) in reduced.iter().enumerate() {
            order[nm as usize] = lms_positions[r];
        }
        order
    };

    sa.fill(EMPTY);
    let mut tails = bucket_tails(&counts);
    for &p in sorted_lms.iter().rev() {
        let c = s[p] as usize;
        tails[c] -= 1;
        sa[tails[c]] = p;
    }
    induce(s, &stype, &counts, &mut sa);
    sa
}

fn lms_substrings_differ(s: &[u32], stype: &[bool], a: usize, b: usize) -> bool {
    let n = s.len();
    let is_lms = |i: usize| i > 0 && stype[i] && !stype[i - 1];
    let mut d = 0;
    loop {
        if a + d >= n || b + d >= n {
            return true;
        }
        if s[a + d] != s[b + d] || stype[a + d] != stype[b + d] {
            return true;
        }
        if d > 0 {
            let (ea, eb) = (is_lms(a + d), is_lms(b + d));
            if ea && eb {
                return false;
            }
            if ea != eb {
                return true;
            }
        }
        d += 1;
    }
}
