public class NoteRegistry {
  private int chord = 0;
  double note = 0.0;
  private int noteTempo = 0;
  private double volumeBass = 0.0;
  private String bassPitch;

  public NoteRegistry(int pendingVolume, String bassPitchText) {
    this.chord = pendingVolume;
    bassPitch = bassPitchText;
  }

  public void addToNote(int chordBeat) {
    for (int index = 0; index < chordBeat; index++) {
      note = note + index;
    }
  }

  public double mergeRhythmChord(double maxNote) {
    double rhythmChord = chord * maxNote;
    rhythmChord = rhythmChord + noteTempo;
    return rhythmChord;
  }

  public int getChord() {
    return chord;
  }

  public String describe() {
    return bassPitch;
  }
}
