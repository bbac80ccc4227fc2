//! Agents, populations and incumbent-best bookkeeping.

/// One member of a population. `aux` holds algorithm-specific state.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent<A> {
    pub position: Vec<f64>,
    pub fitness: f64,
    pub aux: A,
}

impl<A> Agent<A> {
    pub fn new(position: Vec<f64>, fitness: f64, aux: A) -> Self {
        Self {
            position,
            fitness,
            aux,
        }
    }
}

/// A fixed-size population plus the best solution seen so far.
///
/// `best_index` tracks the current minimal-fitness agent (lowest index on
/// ties). The incumbent (`best_position`, `best_fitness`) is elitist: it only
/// ever moves to strictly better points, including points that never became
/// an agent's position.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<A> {
    pub agents: Vec<Agent<A>>,
    pub best_index: usize,
    pub generation: usize,
    best_position: Vec<f64>,
    best_fitness: f64,
}

impl<A> Population<A> {
    /// Panics on an empty agent list.
    pub fn new(agents: Vec<Agent<A>>) -> Self {
        assert!(!agents.is_empty(), "population needs at least one agent");
        let best_index = argmin(agents.iter().map(|a| a.fitness));
        let best_position = agents[best_index].position.clone();
        let best_fitness = agents[best_index].fitness;
        Self {
            agents,
            best_index,
            generation: 0,
            best_position,
            best_fitness,
        }
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    pub fn best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn best_fitness(&self) -> f64 {
        self.best_fitness
    }

    pub fn fitnesses(&self) -> Vec<f64> {
        self.agents.iter().map(|a| a.fitness).collect()
    }

    /// Re-points `best_index` at the argmin and folds it into the incumbent.
    pub fn update_best(&mut self) -> usize {
        self.best_index = argmin(self.agents.iter().map(|a| a.fitness));
        let best = &self.agents[self.best_index];
        if best.fitness < self.best_fitness {
            self.best_fitness = best.fitness;
            self.best_position.clone_from(&best.position);
        }
        self.best_index
    }

    /// Offers a candidate to the incumbent; returns whether it was taken.
    pub fn offer(&mut self, position: &[f64], fitness: f64) -> bool {
        if fitness < self.best_fitness {
            self.best_fitness = fitness;
            self.best_position.clear();
            self.best_position.extend_from_slice(position);
            true
        } else {
            false
        }
    }
}

/// Index of the smallest value, lowest index on ties.
pub fn argmin(values: impl IntoIterator<Item = f64>) -> usize {
    let mut best = 0;
    let mut best_value = f64::INFINITY;
    for (i, v) in values.into_iter().enumerate() {
        if i == 0 || v < best_value {
            best = i;
            best_value = v;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pop(fs: &[f64]) -> Population<()> {
        Population::new(
            fs.iter()
                .enumerate()
                .map(|(i, f)| Agent::new(vec![i as f64], *f, ()))
                .collect(),
        )
    }

    #[test]
    fn best_is_argmin() {
        let mut p = pop(&[3.0, 1.0, 2.0]);
        assert_eq!(p.update_best(), 1);
        assert_eq!(p.best_fitness(), 1.0);
        assert_eq!(p.best_position(), &[1.0]);
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let mut p = pop(&[1.0, 1.0]);
        assert_eq!(p.update_best(), 0);
        assert_eq!(argmin([2.0, 0.5, 0.5, 3.0]), 1);
    }

    #[test]
    fn incumbent_survives_worse_generation() {
        let mut p = pop(&[3.0, 1.0, 2.0]);
        for a in &mut p.agents {
            a.fitness += 10.0;
        }
        p.update_best();
        assert_eq!(p.best_index, 1);
        assert_eq!(p.best_fitness(), 1.0);
    }

    #[test]
    fn offer_is_strict() {
        let mut p = pop(&[2.0]);
        assert!(!p.offer(&[9.0], 2.0));
        assert!(p.offer(&[9.0], 1.5));
        assert_eq!(p.best_position(), &[9.0]);
        assert_eq!(p.best_fitness(), 1.5);
    }
}
