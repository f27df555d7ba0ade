//! Emits a gnuplot script next to a sweep CSV. The script is plain text for
//! the user to run; nothing here executes it.

/// Builds a gnuplot script that plots infidelity against pulse area error
/// from the given CSV on a log scale.
pub fn gnuplot_script(csv_path: &str, title: &str) -> String {
    format!(
        "# Render with: gnuplot -persist <this file>\n\
         set datafile separator ','\n\
         set logscale y\n\
         set yrange [1e-8:2]\n\
         set xlabel 'pulse area error'\n\
         set ylabel 'infidelity'\n\
         set format y '1e%T'\n\
         set grid\n\
         set key top right\n\
         plot '{csv_path}' skip 1 using 1:3 with lines lw 2 title '{title}'\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn script_references_the_csv_and_uses_a_log_axis() {
        let s = gnuplot_script("out/x6.csv", "X6");
        assert!(s.contains("plot 'out/x6.csv' skip 1 using 1:3"));
        assert!(s.contains("set logscale y"));
        assert!(s.contains("set yrange [1e-8:2]"));
        assert!(s.contains("title 'X6'"));
        assert!(s.ends_with('\n'));
    }
}
