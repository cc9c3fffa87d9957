use crate::partitions::Partition;
use crate::simulate::perm::Permutation;

/// Shape of the RSK insertion tableau of the one-line word of `g`.
pub fn rsk_shape(g: &Permutation) -> Partition {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in g.images() {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < carry);
            if pos == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut carry);
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    Partition::from_unsorted(rows.iter().map(Vec::len).collect())
}

/// Length of a longest increasing subsequence (patience sorting).
pub fn longest_increasing_subsequence(word: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for &x in word {
        let pos = tails.partition_point(|&y| y < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(one_based: &[u32]) -> Permutation {
        Permutation::from_images(one_based.iter().map(|x| x - 1).collect()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(rsk_shape(&Permutation::identity(5)).parts(), &[5]);
        assert_eq!(rsk_shape(&Permutation::reverse(5)).parts(), &[1, 1, 1, 1, 1]);
        // inserting 2,1,4,3 leaves rows [1,3] and [2,4]
        assert_eq!(rsk_shape(&perm(&[2, 1, 4, 3])).parts(), &[2, 2]);
        assert_eq!(rsk_shape(&perm(&[3, 1, 2])).parts(), &[2, 1]);
        assert_eq!(longest_increasing_subsequence(&[2, 1, 4, 3]), 2);
    }
}
