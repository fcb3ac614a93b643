//! Streaming FASTA/FASTQ readers and writers.

use std::io::{BufRead, Write};

use super::phred::{phred_decode, phred_encode};
use super::BioError;

/// A named sequence with optional Phred qualities (decoded, not offset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    pub description: Option<String>,
    pub residues: Vec<u8>,
    pub qualities: Option<Vec<u8>>,
}

impl SequenceRecord {
    pub fn new(
        id: impl Into<String>,
        residues: impl Into<Vec<u8>>,
        qualities: Option<Vec<u8>>,
    ) -> Result<Self, BioError> {
        let record = Self {
            id: id.into(),
            description: None,
            residues: residues.into(),
            qualities,
        };
        record.validate()?;
        Ok(record)
    }

    pub fn with_description(mut self, description: impl Into<String>) -> Self {
        self.description = Some(description.into());
        self
    }

    pub fn validate(&self) -> Result<(), BioError> {
        if self.id.is_empty() {
            return Err(BioError::InvalidRecord("empty identifier".into()));
        }
        if let Some(q) = &self.qualities {
            if q.len() != self.residues.len() {
                return Err(BioError::InvalidRecord(format!(
                    "record {}: {} residues but {} qualities",
                    self.id,
                    self.residues.len(),
                    q.len()
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// Restricts residues and qualities to the 1-based closed range.
    pub fn slice(&self, start: usize, end: usize) -> SequenceRecord {
        SequenceRecord {
            id: self.id.clone(),
            description: self.description.clone(),
            residues: self.residues[start - 1..end].to_vec(),
            qualities: self.qualities.as_ref().map(|q| q[start - 1..end].to_vec()),
        }
    }

    fn header(&self) -> String {
        match &self.description {
            Some(d) => format!("{} {}", self.id, d),
            None => self.id.clone(),
        }
    }
}

/// Splits a header line (without its sentinel) into id and description.
fn split_header(text: &str, line: usize) -> Result<(String, Option<String>), BioError> {
    let text = text.trim_end();
    let (id, rest) = match text.find(char::is_whitespace) {
        Some(pos) => (&text[..pos], text[pos..].trim_start()),
        None => (text, ""),
    };
    if id.is_empty() {
        return Err(BioError::Parse {
            line,
            reason: "missing record identifier".into(),
        });
    }
    let description = (!rest.is_empty()).then(|| rest.to_string());
    Ok((id.to_string(), description))
}

/// Line source that strips `\n` / `\r\n` and counts lines.
struct Lines<R> {
    inner: R,
    line: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Lines<R> {
    fn new(inner: R) -> Self {
        Self {
            inner,
            line: 0,
            buf: Vec::new(),
        }
    }

    fn next_line(&mut self) -> Result<Option<(usize, &[u8])>, BioError> {
        self.buf.clear();
        if self.inner.read_until(b'\n', &mut self.buf)? == 0 {
            return Ok(None);
        }
        self.line += 1;
        while matches!(self.buf.last(), Some(b'\n' | b'\r')) {
            self.buf.pop();
        }
        Ok(Some((self.line, &self.buf)))
    }

    fn error(&self, reason: impl Into<String>) -> BioError {
        parse_error(self.line, reason)
    }
}

fn parse_error(line: usize, reason: impl Into<String>) -> BioError {
    BioError::Parse {
        line,
        reason: reason.into(),
    }
}

fn utf8(bytes: &[u8], line: usize) -> Result<&str, BioError> {
    std::str::from_utf8(bytes).map_err(|_| BioError::Parse {
        line,
        reason: "header is not valid UTF-8".into(),
    })
}

/// Streaming FASTA reader. Sequence lines are concatenated and blank lines
/// ignored.
pub struct FastaReader<R> {
    lines: Lines<R>,
    pending: Option<(String, Option<String>)>,
    done: bool,
}

impl<R: BufRead> FastaReader<R> {
    pub fn new(inner: R) -> Self {
        Self {
            lines: Lines::new(inner),
            pending: None,
            done: false,
        }
    }

    fn read_record(&mut self) -> Result<Option<SequenceRecord>, BioError> {
        let (id, description) = match self.pending.take() {
            Some(header) => header,
            None => loop {
                let Some((line_no, line)) = self.lines.next_line()? else {
                    return Ok(None);
                };
                if line.iter().all(u8::is_ascii_whitespace) {
                    continue;
                }
                let Some(rest) = line.strip_prefix(b">") else {
                    return Err(parse_error(line_no, "expected '>' header"));
                };
                break split_header(utf8(rest, line_no)?, line_no)?;
            },
        };

        let mut residues = Vec::new();
        while let Some((line_no, line)) = self.lines.next_line()? {
            if let Some(rest) = line.strip_prefix(b">") {
                self.pending = Some(split_header(utf8(rest, line_no)?, line_no)?);
                break;
            }
            residues.extend(line.iter().filter(|b| !b.is_ascii_whitespace()));
        }
        Ok(Some(SequenceRecord {
            id,
            description,
            residues,
            qualities: None,
        }))
    }
}

impl<R: BufRead> Iterator for FastaReader<R> {
    type Item = Result<SequenceRecord, BioError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.read_record().transpose();
        if !matches!(item, Some(Ok(_))) {
            self.done = true;
        }
        item
    }
}

/// Streaming reader for strict four-line FASTQ records.
pub struct FastqReader<R> {
    lines: Lines<R>,
    offset: u8,
    done: bool,
}

impl<R: BufRead> FastqReader<R> {
    pub fn new(inner: R) -> Self {
        Self::with_offset(inner, super::PHRED33)
    }

    pub fn with_offset(inner: R, offset: u8) -> Self {
        Self {
            lines: Lines::new(inner),
            offset,
            done: false,
        }
    }

    fn read_record(&mut self) -> Result<Option<SequenceRecord>, BioError> {
        let (id, description) = loop {
            let Some((line_no, line)) = self.lines.next_line()? else {
                return Ok(None);
            };
            if line.is_empty() {
                continue;
            }
            let Some(rest) = line.strip_prefix(b"@") else {
                return Err(parse_error(line_no, "expected '@' header"));
            };
            break split_header(utf8(rest, line_no)?, line_no)?;
        };

        let residues = match self.lines.next_line()? {
            Some((_, line)) => line.to_vec(),
            None => return Err(self.lines.error("truncated record: missing sequence")),
        };
        match self.lines.next_line()? {
            Some((_, line)) if line.starts_with(b"+") => {}
            Some(_) => return Err(self.lines.error("expected '+' separator")),
            None => return Err(self.lines.error("truncated record: missing '+' line")),
        }
        let qualities = match self.lines.next_line()? {
            Some((line_no, line)) => {
                phred_decode(line, self.offset).map_err(|e| parse_error(line_no, e.to_string()))?
            }
            None => return Err(self.lines.error("truncated record: missing qualities")),
        };
        if qualities.len() != residues.len() {
            return Err(self.lines.error(format!(
                "{} qualities for {} residues",
                qualities.len(),
                residues.len()
            )));
        }
        Ok(Some(SequenceRecord {
            id,
            description,
            residues,
            qualities: Some(qualities),
        }))
    }
}

impl<R: BufRead> Iterator for FastqReader<R> {
    type Item = Result<SequenceRecord, BioError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.read_record().transpose();
        if !matches!(item, Some(Ok(_))) {
            self.done = true;
        }
        item
    }
}

/// Writes a single-line FASTA record.
pub fn write_fasta<W: Write>(record: &SequenceRecord, out: &mut W) -> std::io::Result<()> {
    writeln!(out, ">{}", record.header())?;
    out.write_all(&record.residues)?;
    out.write_all(b"\n")
}

/// Writes a four-line FASTQ record with an empty `+` line.
pub fn write_fastq<W: Write>(record: &SequenceRecord, offset: u8, out: &mut W) -> Result<(), BioError> {
    let qualities = record
        .qualities
        .as_deref()
        .ok_or_else(|| BioError::MissingQualities { id: record.id.clone() })?;
    writeln!(out, "@{}", record.header())?;
    out.write_all(&record.residues)?;
    out.write_all(b"\n+\n")?;
    out.write_all(&phred_encode(qualities, offset))?;
    out.write_all(b"\n")?;
    Ok(())
}

/// Writes `record` restricted to `region`. A missing region produces a
/// zero-length read, or nothing when `skip_empty` is set.
pub fn write_trimmed_fastq<W: Write>(
    record: &SequenceRecord,
    region: Option<(usize, usize)>,
    offset: u8,
    skip_empty: bool,
    out: &mut W,
) -> Result<(), BioError> {
    match region {
        Some((start, end)) => write_fastq(&record.slice(start, end), offset, out),
        None if skip_empty => Ok(()),
        None => write_fastq(&record.slice(1, 0), offset, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fasta(text: &str) -> Vec<SequenceRecord> {
        FastaReader::new(text.as_bytes()).collect::<Result<_, _>>().unwrap()
    }

    fn fastq(text: &str) -> Vec<SequenceRecord> {
        FastqReader::new(text.as_bytes()).collect::<Result<_, _>>().unwrap()
    }

    #[test]
    fn fasta_examples() {
        let recs = fasta(">x\nACGT\n");
        assert_eq!(recs.len(), 1);
        assert_eq!((recs[0].id.as_str(), recs[0].residues.as_slice()), ("x", &b"ACGT"[..]));

        let recs = fasta(">a\nAC\nGT\n>b\nTT\n");
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].residues, b"ACGT");
        assert_eq!(recs[1].residues, b"TT");
    }

    #[test]
    fn fasta_headers_and_blank_lines() {
        let recs = fasta("\n>chr1 some description\r\nAC\n\nGT\n\n>e\n");
        assert_eq!(recs[0].id, "chr1");
        assert_eq!(recs[0].description.as_deref(), Some("some description"));
        assert_eq!(recs[0].residues, b"ACGT");
        assert_eq!(recs[1].id, "e");
        assert!(recs[1].residues.is_empty());
    }

    #[test]
    fn fasta_errors_carry_line_numbers() {
        let err = FastaReader::new("\nACGT\n".as_bytes()).next().unwrap().unwrap_err();
        assert!(matches!(err, BioError::Parse { line: 2, .. }), "{err}");
        let err = FastaReader::new(">x\nA\n> \n".as_bytes())
            .collect::<Result<Vec<_>, _>>()
            .unwrap_err();
        assert!(matches!(err, BioError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn fastq_examples() {
        let recs = fastq("@r\nAC\n+\nI!\n");
        assert_eq!(recs[0].id, "r");
        assert_eq!(recs[0].residues, b"AC");
        assert_eq!(recs[0].qualities, Some(vec![40, 0]));

        let recs: Vec<_> = FastqReader::with_offset("@r\nA\n+r\nh\n".as_bytes(), 64)
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(recs[0].qualities, Some(vec![40]));
    }

    #[test]
    fn fastq_errors() {
        for (text, line) in [
            (">r\nAC\n+\nII\n", 1),
            ("@r\nAC\n-\nII\n", 3),
            ("@r\nAC\n+\nI\n", 4),
            ("@r\nAC\n+\n", 3),
            ("@r\nAC\n+\n I\n", 4),
        ] {
            let err = FastqReader::new(text.as_bytes()).next().unwrap().unwrap_err();
            match err {
                BioError::Parse { line: l, .. } => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other}"),
            }
        }
    }

    #[test]
    fn trimmed_output() {
        let rec = SequenceRecord::new("r", "AC", Some(vec![40, 0])).unwrap();
        let mut out = Vec::new();
        write_trimmed_fastq(&rec, Some((1, 1)), 33, false, &mut out).unwrap();
        assert_eq!(out, b"@r\nA\n+\nI\n");

        out.clear();
        write_trimmed_fastq(&rec, Some((1, 2)), 33, false, &mut out).unwrap();
        assert_eq!(out, b"@r\nAC\n+\nI!\n");

        out.clear();
        write_trimmed_fastq(&rec, None, 33, true, &mut out).unwrap();
        assert!(out.is_empty());

        write_trimmed_fastq(&rec, None, 33, false, &mut out).unwrap();
        assert_eq!(out, b"@r\n\n+\n\n");
    }

    #[test]
    fn record_validation() {
        assert!(SequenceRecord::new("", "A", None).is_err());
        assert!(SequenceRecord::new("x", "AC", Some(vec![1])).is_err());
        let mut out = Vec::new();
        let rec = SequenceRecord::new("x", "AC", None).unwrap();
        assert!(matches!(write_fastq(&rec, 33, &mut out), Err(BioError::MissingQualities { .. })));
    }
}
