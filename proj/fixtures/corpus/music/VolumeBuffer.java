public class VolumeBuffer {
  private int chord;
  double trackTempo;
  private int noteVolume = 0;
  private int pendingChord = 0;
  private String albumBass;

  public VolumeBuffer(int tempoNote, String albumBassText) {
    this.chord = tempoNote;
    albumBass = albumBassText;
  }

  public void addToNoteVolume(int rateVolume) {
    for (int i = 0; i < rateVolume; i++) {
      noteVolume = noteVolume + i;
    }
  }

  public void setTrackTempo(double trackTempo) {
    this.trackTempo = trackTempo;
  }

  public double getTrackTempo() {
    return trackTempo;
  }

  public boolean isTempoRhythm(int minPitch) {
    boolean tempoRhythm = chord > 0 && trackTempo < minPitch;
    return tempoRhythm;
  }

  public String describe() {
    return albumBass;
  }
}
