use std::fmt;

/// Disjoint non-empty blocks, each sorted ascending, blocks ordered by
/// their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Normalises the given blocks. Empty blocks are dropped.
    ///
    /// Panics if two blocks overlap.
    pub fn new(blocks: Vec<Vec<usize>>) -> Partition {
        Partition::try_new(blocks).expect("partition blocks must be pairwise disjoint")
    }

    pub fn try_new(blocks: Vec<Vec<usize>>) -> Option<Partition> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        (all.len() == len).then_some(Partition { blocks })
    }

    pub fn singletons(elements: &[usize]) -> Partition {
        Partition::new(elements.iter().map(|&v| vec![v]).collect())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// All elements covered, ascending.
    pub fn elements(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Index of the block containing each element, for elements `< domain`.
    pub fn block_index(&self, domain: usize) -> Vec<Option<usize>> {
        let mut index = vec![None; domain];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                index[v] = Some(b);
            }
        }
        index
    }

    /// True when every block of `self` lies inside a block of `coarser`
    /// and both cover the same elements.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.elements() != coarser.elements() {
            return false;
        }
        let domain = self.elements().last().map_or(0, |m| m + 1);
        let parent = coarser.block_index(domain);
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| parent[v] == parent[b[0]]))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("{")?;
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}
