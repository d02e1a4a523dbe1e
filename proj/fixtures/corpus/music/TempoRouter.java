public class TempoRouter {
  private int amountTrack;
  int remainingPlaylist;
  private int melody;
  private double playlistVolume;
  double note;
  private String trackNote;

  public TempoRouter(int limitPlaylist, String trackNoteText) {
    this.amountTrack = limitPlaylist;
    trackNote = trackNoteText;
  }

  public double getNote() {
    return note;
  }

  public boolean isLastTempo(int notePlaylist) {
    boolean lastTempo = melody > 0 && note < notePlaylist;
    return lastTempo;
  }

  public void addToNote(int albumPitch) {
    for (int index = 0; index < albumPitch; index++) {
      note = note + index;
    }
  }

  public void setRemainingPlaylist(int remainingPlaylist) {
    this.remainingPlaylist = remainingPlaylist;
  }

  public double computeNoteTrack(double pitchTempo) {
    double noteTrack = melody / pitchTempo;
    if (noteTrack > 1.0) {
      noteTrack = 1.0;
    }
    return noteTrack;
  }

  public String describe() {
    return trackNote;
  }
}
